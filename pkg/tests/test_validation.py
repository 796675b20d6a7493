"""
Testes unitários para a validação de parâmetros e a leitura de literais.
"""

import pytest

from src.utils.exceptions import LiteralParseError
from src.utils.validation import (
    ValidationResult, parse_int_list, parse_q_list, parse_rank_literal,
    validate_request,
)


def test_parse_rank_literal():
    assert parse_rank_literal("1000467599") == 1000467599
    assert parse_rank_literal("1_000_467_599") == 1000467599
    assert parse_rank_literal("1,000,467,599") == 1000467599
    assert parse_rank_literal(" 10" + "0" * 80) == 10 ** 81
    for bad in ("", "-3", "1e9", "abc"):
        with pytest.raises(LiteralParseError):
            parse_rank_literal(bad)


def test_parse_int_list():
    assert parse_int_list("20,10,5,3,1", 'alpha') == [20, 10, 5, 3, 1]
    assert parse_int_list("(3, 1)", 'alpha') == [3, 1]
    with pytest.raises(LiteralParseError):
        parse_int_list("3,,1", 'alpha')


def test_parse_q_list():
    assert parse_q_list("48,35") == [35, 48]
    assert parse_q_list("35-38, 40") == [35, 36, 37, 38, 40]
    assert parse_q_list("35-35,35") == [35]
    for bad in ("35-", "a", "1,-2"):
        with pytest.raises(LiteralParseError):
            parse_q_list(bad)


def test_validation_result():
    result = ValidationResult()
    result.add_info("ok")
    assert result.passed
    other = ValidationResult()
    other.add_error("falhou")
    other.add_warning("cuidado")
    result.merge(other)
    assert not result.passed
    assert result.errors() == ["falhou"]
    assert result.get_formatted_messages() == ["Info: ok", "Erro: falhou", "Aviso: cuidado"]


@pytest.mark.parametrize('subcommand,params', [
    ('analyze', {'n': 3, 'f': '0,1,2'}),
    ('count', {'n': 10, 'gop': '[2,1,3,2]', 'expect': '302400'}),
    ('rank', {'n': 3, 'value': '27'}),
    ('lalpha-scan', {'n': 10, 'alpha': '20,10,5,3,1', 't': 5, 'q': '35-40'}),
    ('statements', {'n_from': 1, 'n_to': 8}),
    ('discretize', {'n': 64, 'family': 'tent_power', 'ell': 1.5, 'seeds': 10}),
    ('verify', {'up_to': 3}),
])
def test_valid_requests(subcommand, params):
    assert validate_request(subcommand, params).passed


@pytest.mark.parametrize('subcommand,params', [
    ('analyze', {'n': 4, 'f': '0,1,2'}),
    ('order', {'n': 0}),
    ('order', {}),
    ('threshold', {'n': 3, 'gop': '[4]'}),
    ('count', {'n': 5, 'gop': '[]'}),
    ('count', {'n': 5, 'gop': '[1]', 'expect': 'muitos'}),
    ('lalpha-scan', {'n': 10, 'alpha': '20,0', 'q': '35'}),
    ('lalpha-scan', {'n': 10, 'alpha': '20', 'q': '3-'}),
    ('verify', {'up_to': 0}),
    ('discretize', {'n': 64, 'family': 'tent_power', 'ell': 0.5}),
    ('discretize', {'n': 64, 'family': 'identity', 'seeds': 0}),
])
def test_invalid_requests(subcommand, params):
    result = validate_request(subcommand, params)
    assert not result.passed
    assert result.errors()
