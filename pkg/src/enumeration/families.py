"""
Famílias de funções censadas: F_N, L_{1,N} e L_{alpha,q,N}.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from src.core.dynamics import Endofunction
from src.utils.exceptions import DomainError


class FamilyKind(str, Enum):
    FULL = 'full'
    L1 = 'l1'
    LALPHA = 'lalpha'


class WindowMode(str, Enum):
    FULL_WINDOW = 'full_window'
    TRUNCATED = 'truncated'


@dataclass(frozen=True)
class FamilySpec:
    """
    Descrição de uma família de funções sobre X_N.

    Para LAlpha, ``full_window`` aplica a restrição direta em p em [0, N-1-t] e a
    reversa em p em [t, N-1], sempre com os t termos; ``truncated`` aplica as
    duas em todo p, somando só os termos com índice dentro de X_N.
    """

    kind: FamilyKind
    n: int
    alpha: Tuple[int, ...] = field(default=())
    q: int = 0
    window_mode: WindowMode = WindowMode.FULL_WINDOW

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("N deve ser um inteiro positivo")
        object.__setattr__(self, 'kind', FamilyKind(self.kind))
        object.__setattr__(self, 'window_mode', WindowMode(self.window_mode))
        object.__setattr__(self, 'alpha', tuple(int(a) for a in self.alpha))
        if self.kind is FamilyKind.LALPHA:
            if not self.alpha:
                raise DomainError("LAlpha exige pelo menos um peso")
            if any(a < 1 for a in self.alpha):
                raise DomainError(f"Pesos devem ser positivos: {list(self.alpha)}")
            if self.q < 0:
                raise DomainError(f"q deve ser não negativo: {self.q}")

    @classmethod
    def full(cls, n: int) -> 'FamilySpec':
        return cls(FamilyKind.FULL, n)

    @classmethod
    def l1(cls, n: int) -> 'FamilySpec':
        return cls(FamilyKind.L1, n)

    @classmethod
    def lalpha(cls, n: int, alpha: Sequence[int], q: int,
               window_mode: str = settings.DEFAULT_WINDOW_MODE) -> 'FamilySpec':
        return cls(FamilyKind.LALPHA, n, tuple(alpha), q, WindowMode(window_mode))

    @property
    def t(self) -> int:
        return len(self.alpha)

    def constraint(self) -> Tuple[Tuple[int, ...], int, bool]:
        """(pesos, q, truncado) equivalentes; L1 é LAlpha com alpha=(1,), q=1."""
        if self.kind is FamilyKind.FULL:
            return (), 0, True
        if self.kind is FamilyKind.L1:
            return (1,), 1, True
        return self.alpha, self.q, self.window_mode is WindowMode.TRUNCATED

    def step_radius(self) -> List[int]:
        """
        Raio máximo |f(p) - f(p-1)| para cada p, usado como faixa de candidatos.

        Vale q // alpha_1 sempre que a restrição direta em p-1 ou a reversa em p
        estiver ativa; caso contrário não há limite.
        """
        alpha, q, truncated = self.constraint()
        radius = [self.n] * self.n
        if not alpha:
            return radius
        t = len(alpha)
        bound = q // alpha[0]
        for p in range(1, self.n):
            forward_active = truncated or p - 1 <= self.n - 1 - t
            backward_active = truncated or p >= t
            if forward_active or backward_active:
                radius[p] = min(self.n, bound)
        return radius

    def default_max_n(self) -> int:
        if self.kind is FamilyKind.FULL:
            return settings.FULL_FAMILY_MAX_N
        if self.kind is FamilyKind.L1:
            return settings.L1_DEFAULT_MAX_N
        return settings.LALPHA_MAX_N

    def estimated_size(self) -> int:
        """Cota superior N * prod(2r+1) para o tamanho da família."""
        estimate = self.n
        for r in self.step_radius()[1:]:
            estimate *= min(self.n, 2 * r + 1)
        return estimate

    def describe(self) -> Dict:
        info = {'family': self.kind.value, 'n': self.n}
        if self.kind is FamilyKind.LALPHA:
            info.update({
                'alpha': list(self.alpha),
                't': self.t,
                'q': self.q,
                'window_mode': self.window_mode.value,
            })
        return info

    def __str__(self) -> str:
        if self.kind is FamilyKind.FULL:
            return f"F_{self.n}"
        if self.kind is FamilyKind.L1:
            return f"L1_{self.n}"
        return f"LAlpha_{self.n}(alpha={list(self.alpha)}, q={self.q}, {self.window_mode.value})"


def _weighted_sum(images: Sequence[int], p: int, alpha: Sequence[int], step: int,
                  truncated: bool) -> Optional[int]:
    """Soma alpha_r |f(p) - f(p + step*r)|; None se a janela completa não cabe."""
    n = len(images)
    total = 0
    for r, weight in enumerate(alpha, start=1):
        idx = p + step * r
        if not 0 <= idx < n:
            if truncated:
                continue
            return None
        total += weight * abs(images[p] - images[idx])
    return total


def family_contains(spec: FamilySpec, f: Endofunction) -> bool:
    """
    Avalia diretamente o predicado da família.

    Raises:
        DomainError: Se o tamanho de f diferir do N da família
    """
    if f.size != spec.n:
        raise DomainError(f"Função de tamanho {f.size} para família com N={spec.n}")
    alpha, q, truncated = spec.constraint()
    if not alpha:
        return True
    images = f.images
    for p in range(spec.n):
        for step in (1, -1):
            total = _weighted_sum(images, p, alpha, step, truncated)
            if total is not None and total > q:
                return False
    return True
