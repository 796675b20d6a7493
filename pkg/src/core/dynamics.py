"""
Endofunções em X_N = {0, ..., N-1} e a estrutura de órbitas associada.

A decomposição em componentes é feita em O(N) por uma varredura iterativa do
grafo funcional com marcação de caminho: cada ponto recebe primeiro um carimbo
"em andamento" próprio da varredura corrente e depois o rótulo definitivo da
componente. Percorrendo x em ordem crescente, todo ciclo novo pertence a uma
componente cujo menor elemento é o próprio x.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from src.gop.pattern import Gop
from src.utils.exceptions import DomainError, LiteralParseError


class ComponentNature(str, Enum):
    ATTRACTIVE = 'attractive'
    REPULSIVE = 'repulsive'


@dataclass(frozen=True)
class Endofunction:
    """Aplicação total f: X_N -> X_N guardada como tabela de imagens."""

    size: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise DomainError("N deve ser um inteiro positivo")
        images = tuple(int(v) for v in self.images)
        if len(images) != self.size:
            raise DomainError(
                f"Tabela com {len(images)} imagens para N={self.size}"
            )
        for k, v in enumerate(images):
            if not 0 <= v < self.size:
                raise DomainError(f"f({k})={v} fora de [0, {self.size - 1}]")
        object.__setattr__(self, 'images', images)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> 'Endofunction':
        return cls(len(images), tuple(images))

    @classmethod
    def from_literal(cls, text: str) -> 'Endofunction':
        """Lê "a0,a1,...,a(N-1)"; o índice é a pré-imagem."""
        parts = [part.strip() for part in (text or '').strip().strip('[]').split(',')]
        if not parts or any(not part.isdigit() for part in parts):
            raise LiteralParseError(f"Literal de função inválido: {text!r}")
        try:
            return cls.from_images([int(part) for part in parts])
        except DomainError as e:
            raise LiteralParseError(f"Literal de função inválido: {text!r} ({e})") from e

    @classmethod
    def identity(cls, n: int) -> 'Endofunction':
        return cls(n, tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> 'Endofunction':
        return cls(n, (value,) * n)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return self.size

    def to_literal(self) -> str:
        return ','.join(str(v) for v in self.images)

    def check_element(self, x: int) -> None:
        if not 0 <= x < self.size:
            raise DomainError(f"Elemento {x} fora de X_{self.size}")


@dataclass(frozen=True)
class OrbitTrace:
    """Órbita de ``start``: parte transiente seguida do ciclo, na ordem visitada."""

    start: int
    tail: Tuple[int, ...]
    cycle: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.cycle)

    @property
    def is_periodic(self) -> bool:
        return not self.tail


@dataclass(frozen=True)
class ComponentRecord:
    representative: int
    members: Tuple[int, ...]
    cycle: Tuple[int, ...]
    order: int
    nature: ComponentNature

    def to_dict(self) -> Dict:
        return {
            'rep': self.representative,
            'members': list(self.members),
            'cycle': list(self.cycle),
            'order': self.order,
            'nature': self.nature.value,
        }


@dataclass(frozen=True)
class Decomposition:
    """Partição de X_N em componentes, ordenadas pelo representante."""

    size: int
    components: Tuple[ComponentRecord, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def gop(self) -> Gop:
        return Gop(tuple(c.order for c in self.components))

    @property
    def periodic_point_count(self) -> int:
        return sum(c.order for c in self.components)

    def to_dict(self) -> Dict:
        return {
            'n': self.size,
            'components': [c.to_dict() for c in self.components],
        }


def iterate(f: Endofunction, x: int, k: int) -> int:
    """
    Retorna f^k(x), com f^0(x) = x.

    Para k grande usa a órbita de x, sem iterar k vezes.
    """
    f.check_element(x)
    if k < 0:
        raise DomainError(f"Número de iterações negativo: {k}")
    trace = orbit_of(f, x)
    path = trace.tail + trace.cycle
    if k < len(path):
        return path[k]
    return trace.cycle[(k - len(trace.tail)) % len(trace.cycle)]


def orbit_of(f: Endofunction, x: int) -> OrbitTrace:
    """Calcula a órbita de x até o primeiro retorno (no máximo N+1 avaliações)."""
    f.check_element(x)
    seen: Dict[int, int] = {}
    path: List[int] = []
    y = x
    while y not in seen:
        seen[y] = len(path)
        path.append(y)
        y = f.images[y]
    entry = seen[y]
    return OrbitTrace(start=x, tail=tuple(path[:entry]), cycle=tuple(path[entry:]))


def order_of(f: Endofunction, x: int) -> int:
    """Retorna w(x, f), o comprimento do ciclo atingido a partir de x."""
    return orbit_of(f, x).order


def is_periodic(f: Endofunction, x: int) -> bool:
    return orbit_of(f, x).is_periodic


def _cycle_from_least(f: Endofunction, cycle: Sequence[int]) -> Tuple[int, ...]:
    start = min(cycle)
    listed = [start]
    y = f.images[start]
    while y != start:
        listed.append(y)
        y = f.images[y]
    return tuple(listed)


def decompose(f: Endofunction) -> Decomposition:
    """
    Decompõe X_N nas componentes de f em O(N).

    Rótulos de estado: 0 = não visitado; -(x+1) = no caminho da varredura
    iniciada em x; c >= 1 = pertence à componente c.
    """
    n = f.size
    images = f.images
    state = [0] * n
    cycles: List[Tuple[int, ...]] = []
    members: List[List[int]] = []
    for x in range(n):
        if state[x]:
            continue
        stamp = -(x + 1)
        path = []
        y = x
        while state[y] == 0:
            state[y] = stamp
            path.append(y)
            y = images[y]
        if state[y] == stamp:
            cycles.append(_cycle_from_least(f, path[path.index(y):]))
            members.append([])
            label = len(cycles)
        else:
            label = state[y]
        for z in path:
            state[z] = label
        members[label - 1].extend(path)

    components = []
    for cycle, group in zip(cycles, members):
        group.sort()
        nature = (
            ComponentNature.REPULSIVE if len(group) == len(cycle)
            else ComponentNature.ATTRACTIVE
        )
        components.append(ComponentRecord(
            representative=group[0],
            members=tuple(group),
            cycle=cycle,
            order=len(cycle),
            nature=nature,
        ))
    return Decomposition(size=n, components=tuple(components))


def decompose_naive(f: Endofunction) -> Decomposition:
    """Decomposição de referência em O(N^2): itera cada ponto até o ciclo."""
    by_cycle: Dict[frozenset, List[int]] = {}
    cycle_of: Dict[frozenset, Tuple[int, ...]] = {}
    for x in range(f.size):
        trace = orbit_of(f, x)
        key = frozenset(trace.cycle)
        by_cycle.setdefault(key, []).append(x)
        cycle_of[key] = trace.cycle
    components = []
    for key, group in by_cycle.items():
        cycle = _cycle_from_least(f, cycle_of[key])
        nature = (
            ComponentNature.REPULSIVE if len(group) == len(cycle)
            else ComponentNature.ATTRACTIVE
        )
        components.append(ComponentRecord(
            representative=min(group),
            members=tuple(sorted(group)),
            cycle=cycle,
            order=len(cycle),
            nature=nature,
        ))
    components.sort(key=lambda c: c.representative)
    return Decomposition(size=f.size, components=tuple(components))


def gop_lengths(images: Sequence[int]) -> Tuple[int, ...]:
    """Ordens dos ciclos na ordem de descoberta (caminho rápido para censos)."""
    n = len(images)
    state = [0] * n
    lengths = []
    for x in range(n):
        if state[x]:
            continue
        stamp = x + 1
        y = x
        while state[y] == 0:
            state[y] = stamp
            y = images[y]
        if state[y] == stamp:
            length = 1
            z = images[y]
            while z != y:
                length += 1
                z = images[z]
            lengths.append(length)
    return tuple(lengths)


def gop_of(f: Endofunction) -> Gop:
    """Retorna o gop [w(x_0), ..., w(x_p)] de f."""
    return Gop(gop_lengths(f.images))


def periodic_points(f: Endofunction) -> List[int]:
    """Todos os pontos periódicos de f, em ordem crescente."""
    return sorted(p for c in decompose(f).components for p in c.cycle)
