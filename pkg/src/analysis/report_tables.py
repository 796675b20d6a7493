"""
Construção das tabelas de saída (pandas) e serialização em csv, json ou texto.

Inteiros grandes permanecem como objetos int do Python; em json e csv são
escritos em decimal exato.
"""

import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

import pandas as pd

from src.core.dynamics import Decomposition
from src.discretized.orbit_structure import OrbitStructureReport
from src.enumeration.census import FormulaCheck, GopStatistics
from src.enumeration.l1_tables import L1Row, StatementCheck
from src.enumeration.lalpha import CalibrationRow, LAlphaScan, QInterval
from src.gop.algebra import OrderRow
from src.utils.exceptions import DomainError

FORMATS = ('csv', 'json', 'plain')


def decomposition_frame(decomposition: Decomposition) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'rep': c.representative,
            'members': ','.join(map(str, c.members)),
            'cycle': ','.join(map(str, c.cycle)),
            'order': c.order,
            'nature': c.nature.value,
        }
        for c in decomposition.components
    ], columns=['rep', 'members', 'cycle', 'order', 'nature'])


def gop_counts_frame(stats: GopStatistics, with_total: bool = True) -> pd.DataFrame:
    rows = [{'gop': str(g), 'count': c} for g, c in stats.counts.items()]
    if with_total:
        rows.append({'gop': 'total', 'count': stats.total_functions})
    return pd.DataFrame(rows, columns=['gop', 'count'])


def l1_frame(rows: Sequence[L1Row], total: Optional[int] = None) -> pd.DataFrame:
    records = [
        {'gop': str(r.gop), 'count': r.display_raw(), 'aggregate': r.display_aggregate()}
        for r in rows
    ]
    if total is not None:
        records.insert(0, {'gop': 'total', 'count': total, 'aggregate': total})
    return pd.DataFrame(records, columns=['gop', 'count', 'aggregate'])


def statements_frame(checks: Sequence[StatementCheck]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'statement': c.statement,
            'n': c.n,
            'k': c.k,
            'lhs': c.lhs,
            'rhs': c.rhs,
            'holds': c.holds,
            'variant': c.variant,
        }
        for c in checks
    ], columns=['statement', 'n', 'k', 'lhs', 'rhs', 'holds', 'variant'])


def lalpha_frame(scan: LAlphaScan) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'q': r.q,
            'max_period': r.max_period,
            'max_modulus': r.max_modulus,
            'gop_number': r.gop_number,
            'functions_number': r.functions_number,
        }
        for r in scan.rows
    ], columns=['q', 'max_period', 'max_modulus', 'gop_number', 'functions_number'])


def intervals_frame(intervals: Iterable[QInterval]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'max_period': i.max_period,
            'gop_number': i.gop_number,
            'q_start': i.q_start,
            'q_end': i.q_end,
        }
        for i in intervals
    ], columns=['max_period', 'gop_number', 'q_start', 'q_end'])


def calibration_frame(rows: Sequence[CalibrationRow]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'q': r.q,
            'window_mode': r.window_mode,
            'max_period': r.computed[0],
            'max_modulus': r.computed[1],
            'gop_number': r.computed[2],
            'functions_number': r.computed[3],
            'reference_functions': r.reference[3],
            'functions_delta': r.functions_delta,
            'matches': r.matches,
        }
        for r in rows
    ])


def orbit_frame(report: OrbitStructureReport) -> pd.DataFrame:
    return pd.DataFrame([
        {
            'period': c.period,
            'basin_size': c.basin_size,
            'relative_size': c.relative_size,
            'least_cycle_point': c.least_cycle_point,
        }
        for c in report.cycles
    ], columns=['period', 'basin_size', 'relative_size', 'least_cycle_point'])


def order_frame(rows: Sequence[OrderRow], with_modulus: bool = False) -> pd.DataFrame:
    if not with_modulus:
        return pd.DataFrame({'gop': [str(r.gop) for r in rows]})
    return pd.DataFrame([
        {'gop': str(r.gop), 'modulus': r.modulus, 'modulus_minus_w1': r.tail_modulus}
        for r in rows
    ], columns=['gop', 'modulus', 'modulus_minus_w1'])


def formula_check_frame(checks: Sequence[FormulaCheck]) -> pd.DataFrame:
    return pd.DataFrame([
        {'gop': str(c.gop), 'census': c.census, 'formula': c.formula,
         'matches': c.matches}
        for c in checks
    ], columns=['gop', 'census', 'formula', 'matches'])


def _json_default(value: Any):
    if hasattr(value, 'item'):
        return value.item()
    return str(value)


def render(frame: pd.DataFrame, fmt: str, metadata: Optional[Dict] = None,
           header: bool = True) -> str:
    """
    Serializa uma tabela.

    Args:
        frame: Tabela a serializar
        fmt: 'csv', 'json' ou 'plain'
        metadata: Linhas de cabeçalho (csv: comentários '#'; json: chave 'metadata')
        header: Inclui os nomes das colunas em csv e texto

    Returns:
        str: Texto pronto para a saída padrão
    """
    if fmt not in FORMATS:
        raise DomainError(f"Formato desconhecido: {fmt!r}")
    if fmt == 'json':
        records = frame.astype(object).to_dict(orient='records')
        payload: Any = records if metadata is None else {'metadata': metadata,
                                                         'rows': records}
        return json.dumps(payload, default=_json_default, ensure_ascii=False)
    if fmt == 'csv':
        lines: List[str] = []
        if metadata:
            lines.extend(f"# {key}={_flat(value)}" for key, value in metadata.items())
        lines.append(frame.to_csv(index=False, header=header).rstrip('\n'))
        return '\n'.join(lines)
    lines = []
    if metadata:
        lines.extend(f"{key}: {_flat(value)}" for key, value in metadata.items())
    if not frame.empty:
        lines.append(frame.to_string(index=False, header=header))
    return '\n'.join(lines)


def render_value(value: Any, fmt: str, key: str = 'value',
                 metadata: Optional[Dict] = None) -> str:
    """Serializa um único valor (contagem, posto, literal)."""
    if fmt == 'json':
        payload = {key: value}
        if metadata:
            payload.update(metadata)
        return json.dumps(payload, default=_json_default, ensure_ascii=False)
    if fmt == 'csv':
        frame = pd.DataFrame([{key: value, **(metadata or {})}])
        return frame.to_csv(index=False).rstrip('\n')
    return str(value)


def _flat(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ','.join(map(str, value))
    return str(value)
