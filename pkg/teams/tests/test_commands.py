import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

P6_TEXT = "graph 6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"
C5_TEXT = "graph 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


@pytest.mark.integration
class TestTeamCommand:
    """Test the team management command"""

    def test_set_diagnosis(self, graph_file):
        """Test the P6 interior is reported comfortable with its inequalities"""
        output = run('team', graph_file(P6_TEXT), '--set', '1,2,3,4')

        assert 'comfortable: yes' in output
        assert 'vertex 1: team eccentricity 3 < graph eccentricity 4' in output
        assert 'vertex 2: team eccentricity 2 < graph eccentricity 3' in output
        assert 'vertex 3: team eccentricity 2 < graph eccentricity 3' in output
        assert 'vertex 4: team eccentricity 3 < graph eccentricity 4' in output

    def test_set_diagnosis_explains_failure(self, graph_file):
        """Test a C5 edge is reported as not dominating"""
        output = run('team', graph_file(C5_TEXT), '--set', '0,1')

        assert 'dominating: no' in output
        assert 'less dispersive: yes' in output
        assert 'comfortable: no' in output
        assert 'undominated: 3' in output

    def test_min_comfortable(self, graph_file):
        """Test the minimum comfortable team of P6"""
        output = run('team', graph_file(P6_TEXT), '--min', 'comfortable')

        assert 'minimum comfortable team: {1,2,3,4}' in output
        assert 'size: 4' in output

    def test_min_comfortable_none(self, graph_file):
        """Test C5 has no team and exits with 1"""
        out = StringIO()
        with pytest.raises(CommandError) as excinfo:
            call_command('team', graph_file(C5_TEXT), '--min', 'comfortable', stdout=out)

        assert excinfo.value.returncode == 1
        assert 'no comfortable team (exhausted n=5)' in out.getvalue()

    def test_min_cds_and_dominating(self, graph_file):
        """Test the minimum CDS and dominating set of P6"""
        path = graph_file(P6_TEXT)

        assert 'size: 4' in run('team', path, '--min', 'cds')
        assert 'minimum dominating set: {1,4}' in run('team', path, '--min', 'dominating')

    def test_records_round_trip(self, graph_file):
        """Test a witness printed as a record can be fed back through --set"""
        path = graph_file(P6_TEXT)
        record = json.loads(run('team', path, '--min', 'comfortable', '--format', 'records'))

        assert record['record'] == 'comfort_verdict'
        assert record['members'] == [1, 2, 3, 4]
        diagnosis = json.loads(run('team', path, '--set', record['set'], '--format', 'records'))
        assert diagnosis['comfortable'] is True
        assert diagnosis['per_member'][0] == {'vertex': 1, 'graph_ecc': 4, 'team_ecc': 3, 'lowered': True}

    def test_product_file_labels(self, graph_file, tmp_path):
        """Test witnesses on a product file carry (i,j) labels"""
        p4 = graph_file("graph 4 3\n0 1\n1 2\n2 3\n", 'p4.txt')
        k2 = graph_file("graph 2 1\n0 1\n", 'k2.txt')
        product = tmp_path / 'product.txt'
        call_command('product', 'lex', p4, k2, str(product), stdout=StringIO())

        output = run('team', str(product), '--min', 'comfortable')

        assert '{2,4} = {(1,0), (2,0)}' in output

    @pytest.mark.parametrize('args', [
        ('--set', '0,9'),
        ('--set', 'a,b'),
        ('--min', 'largest'),
    ])
    def test_usage_errors(self, graph_file, args):
        """Test bad sets and modes exit with 2"""
        with pytest.raises(CommandError) as excinfo:
            run('team', graph_file(P6_TEXT), *args)

        assert excinfo.value.returncode == 2

    def test_single_vertex_graph(self, graph_file):
        """Test the trivial graph is refused with 2"""
        with pytest.raises(CommandError) as excinfo:
            run('team', graph_file("graph 1 0\n"), '--min', 'comfortable')

        assert excinfo.value.returncode == 2

    def test_binary_file(self, tmp_path):
        """Test undecodable input exits with 2, never with the no-team code"""
        path = tmp_path / 'binary.txt'
        path.write_bytes(b"graph 2 1\n0 1\n\xff\xfe\n")

        with pytest.raises(CommandError) as excinfo:
            run('team', str(path), '--min', 'comfortable')

        assert excinfo.value.returncode == 2
