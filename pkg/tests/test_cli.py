"""
Testes da linha de comando: saída, formatos e códigos de saída.
"""

import json

import pytest

from src.cli import commands
from src.cli.commands import (
    EXIT_BUDGET, EXIT_OK, EXIT_VALIDATION, CommandRequest, parse_request, run,
)
from src.gop.algebra import enumerate_gops
from src.main import main


def execute(*argv):
    return run(parse_request(list(argv) + ['--threads', '1']))


def test_gop():
    result = execute('gop', '--n', '10', '--f', '9,6,9,8,3,7,6,5,4,2')
    assert result.exit_code == EXIT_OK
    assert result.output == '[2,1,3,2]'


def test_analyze_json():
    result = execute('analyze', '--n', '8', '--f', '1,0,0,3,5,6,7,4', '--format', 'json')
    payload = json.loads(result.output)
    assert payload['gop'] == '[2,1,4]'
    assert payload['n'] == 8
    assert payload['components'][0] == {
        'rep': 0, 'members': [0, 1, 2], 'cycle': [0, 1], 'order': 2,
        'nature': 'attractive',
    }


def test_analyze_plain():
    result = execute('analyze', '--n', '3', '--f', '0,1,2')
    assert result.output.splitlines()[0] == 'gop: [1,1,1]'
    assert 'repulsive' in result.output


def test_count():
    assert execute('count', '--n', '10', '--gop', '[2,1,3,2]').output == '302400'
    result = execute('count', '--n', '10', '--gop', '2,1,3,2', '--expect', '302401',
                     '--scientific')
    assert result.exit_code == EXIT_OK
    assert result.output.splitlines() == ['302400', '3.02e+5', 'matches: false']


def test_count_json_keeps_big_integers_exact():
    result = execute('count', '--n', '50', '--gop', '5,2,10,8,15,2,3', '--format', 'json')
    payload = json.loads(result.output)
    assert payload['count'] == 124065425615280788411509764670729431180399083520000000000000000


def test_order():
    lines = execute('order', '--n', '4').output.splitlines()
    assert len(lines) == 15
    assert lines[0] == '[1]'
    assert lines[8] == '[2]'
    assert lines[-1] == '[4]'
    csv = execute('order', '--n', '2', '--with-modulus', '--format', 'csv').output
    assert csv.splitlines() == [
        'gop,modulus,modulus_minus_w1', '[1],1,0', '"[1,1]",2,1', '[2],2,0'
    ]


def test_threshold_and_rank():
    threshold = execute('threshold', '--n', '10', '--gop', '2,1,3,2')
    assert threshold.output == '1,0,0,0,4,6,7,5,9,8'
    rank = execute('rank', '--n', '10', '--f', threshold.output)
    assert rank.output == '1000467599'
    assert execute('rank', '--n', '3', '--value', '2').output == '0,0,1'


def test_enumerate_csv():
    result = execute('enumerate', '--family', 'l1', '--n', '5', '--format', 'csv')
    lines = result.output.splitlines()
    assert '# family=l1' in lines
    assert 'gop,count' in lines
    assert 'total,259' in lines
    assert '"[2,1]",12' in lines


def test_enumerate_lalpha():
    result = execute('enumerate', '--family', 'lalpha', '--n', '10', '--alpha',
                     '20,10,5,3,1', '--q', '0', '--format', 'json')
    payload = json.loads(result.output)
    assert payload['metadata']['total_functions'] == 10
    assert payload['metadata']['window_mode'] == 'full_window'


def test_check_formula():
    result = execute('enumerate', '--family', 'full', '--n', '4', '--check-formula')
    assert result.exit_code == EXIT_OK
    assert 'False' not in result.output


def test_l1_table():
    result = execute('l1-table', '--n', '5', '--format', 'csv')
    lines = result.output.splitlines()
    assert 'total,259,259' in lines
    assert '"[2,1]",12,18' in lines
    assert '"[1,2]",6,+' in lines


def test_statements():
    result = execute('statements', '--n-to', '6', '--format', 'csv')
    assert result.exit_code == EXIT_OK
    assert result.output.startswith('statement,n,k,lhs,rhs,holds,variant')


def test_lalpha_scan_intervals():
    result = execute('lalpha-scan', '--n', '10', '--alpha', '20,10,5,3,1', '--q', '0,35',
                     '--show', 'period-intervals', '--format', 'json')
    payload = json.loads(result.output)
    assert payload['metadata']['t'] == 5
    assert [(r['max_period'], r['q_start'], r['q_end']) for r in payload['rows']] == [
        (1, 0, 0), (2, 35, 35)
    ]


def test_discretize_csv():
    result = execute('discretize', '--family', 'doubling', '--n', '8', '--format', 'csv')
    lines = result.output.splitlines()
    assert '# n=8' in lines
    assert '# mode=complete' in lines
    assert lines[-2:] == ['period,basin_size,relative_size,least_cycle_point',
                          '1,8,1.0,0']


def test_discretize_sampled_is_deterministic():
    argv = ('discretize', '--family', 'circle_quadratic', '--n', '4096', '--mode',
            'sampled', '--seeds', '300', '--rng-seed', '5', '--format', 'json')
    assert execute(*argv).output == execute(*argv).output


def test_verify():
    result = execute('verify', '--up-to', '4')
    assert result.exit_code == EXIT_OK


@pytest.mark.parametrize('argv', [
    ('count', '--n', '3', '--gop', '2,2'),
    ('analyze', '--n', '5', '--f', '0,1'),
    ('gop', '--n', '3', '--f', '0,1,7'),
    ('rank', '--n', '3'),
    ('rank', '--n', '3', '--value', '28'),
    ('lalpha-scan', '--n', '10', '--alpha', 'a,b', '--q', '35'),
    ('lalpha-scan', '--n', '10', '--alpha', '20,10', '--t', '5', '--q', '35'),
    ('statements', '--n-from', '5', '--n-to', '3'),
    ('discretize', '--family', 'tent_power', '--n', '64'),
    ('enumerate', '--family', 'lalpha', '--n', '5'),
])
def test_validation_errors(argv):
    assert execute(*argv).exit_code == EXIT_VALIDATION


def test_budget_refusal():
    assert execute('enumerate', '--family', 'full', '--n', '12').exit_code == EXIT_BUDGET
    result = execute('discretize', '--family', 'identity', '--n', str(2 ** 22),
                     '--memory-mb', '1')
    assert result.exit_code == EXIT_BUDGET


def test_unknown_subcommand():
    assert run(CommandRequest('plot')).exit_code == EXIT_VALIDATION


def test_main_exit_codes(capsys):
    assert main(['gop', '--n', '2', '--f', '1,0']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '[2]'
    assert main(['count']) == EXIT_VALIDATION
    assert main(['enumerate', '--family', 'full', '--n', '12']) == EXIT_BUDGET


def test_threshold_round_trip():
    """A função limiar de A, analisada, tem gop A."""
    for gop in enumerate_gops(5):
        literal = execute('threshold', '--n', '5', '--gop', str(gop)).output
        assert execute('gop', '--n', '5', '--f', literal).output == str(gop)


def test_census_memory_refusal():
    result = execute('enumerate', '--family', 'lalpha', '--n', '24', '--alpha', '1',
                     '--q', '0', '--max-n', '24', '--memory-mb', '64')
    assert result.exit_code == EXIT_BUDGET


def test_memory_error_maps_to_budget_exit(monkeypatch):
    def exhausted(request):
        raise MemoryError

    monkeypatch.setitem(commands.HANDLERS, 'gop', exhausted)
    assert execute('gop', '--n', '2', '--f', '1,0').exit_code == EXIT_BUDGET
