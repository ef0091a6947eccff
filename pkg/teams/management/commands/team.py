from graphs.serializers import DominationWitnessSerializer
from graphs.services.domination import DominationSolver
from graphs.services.graph_core import format_distance
from teams.serializers import ComfortVerdictSerializer, TeamDiagnosisSerializer
from teams.services.comfort import ComfortableTeamSolver, is_comfortable_team
from utils.commands import GraphCommand, load_graph, negative_outcome, usage_error

MIN_MODES = ('comfortable', 'cds', 'dominating')


def parse_set_argument(value: str):
    """Parse `a,b,c` into vertex ids"""
    try:
        members = [int(token) for token in value.split(',') if token.strip()]
    except ValueError:
        raise usage_error(f"Invalid --set value '{value}', expected comma-separated vertex ids")
    if not members:
        raise usage_error("--set needs at least one vertex id")
    return members


class Command(GraphCommand):
    help = 'Diagnose a candidate team, or find a minimum comfortable team, connected dominating set or dominating set'

    def add_arguments(self, parser):
        parser.add_argument(
            'file',
            type=str,
            help='Edge-list graph file'
        )
        mode = parser.add_mutually_exclusive_group(required=True)
        mode.add_argument(
            '--set',
            type=str,
            dest='team_set',
            help='Candidate team as comma-separated vertex ids, e.g. 1,2,3,4'
        )
        mode.add_argument(
            '--min',
            type=str,
            dest='min_mode',
            help=f'Minimum search: {", ".join(MIN_MODES)}'
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        min_mode = options.get('min_mode')
        if min_mode is not None and min_mode not in MIN_MODES:
            raise usage_error(f"Invalid --min mode: {min_mode}. Must be one of {list(MIN_MODES)}")

        g, indexing = load_graph(options['file'])
        context = {'indexing': indexing}
        self._indexing = indexing

        if options.get('team_set') is not None:
            members = parse_set_argument(options['team_set'])
            diagnosis = self.run_service(is_comfortable_team, g, members)
            if output_format == 'records':
                self.write_records([('team_diagnosis', TeamDiagnosisSerializer(diagnosis, context=context).data)])
            else:
                self._write_diagnosis(diagnosis)
            return

        if min_mode == 'comfortable':
            verdict = self.run_service(ComfortableTeamSolver().min_comfortable_team, g)
            if output_format == 'records':
                self.write_records([('comfort_verdict', ComfortVerdictSerializer(verdict, context=context).data)])
            elif verdict.exists:
                self.stdout.write(f'minimum comfortable team: {self._members(verdict.team)}')
                self.stdout.write(f'size: {verdict.size}')
                self.stdout.write(f'set: {",".join(str(v) for v in sorted(verdict.team))}')
            else:
                self.stdout.write(f'no comfortable team (exhausted n={verdict.searched_through})')
            if not verdict.exists:
                raise negative_outcome(f'{options["file"]} has no comfortable team')
            return

        solver = DominationSolver()
        if min_mode == 'cds':
            witness = self.run_service(solver.min_connected_dominating_set, g)
            title = 'minimum connected dominating set'
        else:
            witness = self.run_service(solver.min_dominating_set, g)
            title = 'minimum dominating set'
        if output_format == 'records':
            self.write_records([('domination_witness', DominationWitnessSerializer(witness, context=context).data)])
            return
        self.stdout.write(f'{title}: {self._members(witness.witness)}')
        self.stdout.write(f'size: {witness.size}')
        self.stdout.write(f'set: {",".join(str(v) for v in sorted(witness.witness))}')

    def _members(self, team) -> str:
        ordered = sorted(team)
        text = '{' + ','.join(str(v) for v in ordered) + '}'
        if self._indexing is not None:
            text += ' = {' + ', '.join(self._indexing.label(v) for v in ordered) + '}'
        return text

    def _write_diagnosis(self, diagnosis):
        yes_no = {True: 'yes', False: 'no'}
        self.stdout.write(f'team: {self._members(entry.vertex for entry in diagnosis.per_member)}')
        self.stdout.write(f'dominating: {yes_no[diagnosis.dominating]}')
        self.stdout.write(f'connected: {yes_no[diagnosis.connected]}')
        self.stdout.write(f'less dispersive: {yes_no[diagnosis.less_dispersive]}')
        self.stdout.write(f'comfortable: {yes_no[diagnosis.comfortable]}')
        for entry in diagnosis.per_member:
            relation = '<' if entry.lowered else '>='
            self.stdout.write(
                f'vertex {entry.vertex}: team eccentricity {format_distance(entry.team_ecc)} '
                f'{relation} graph eccentricity {format_distance(entry.graph_ecc)}'
            )
        if diagnosis.undominated:
            self.stdout.write(f'undominated: {",".join(str(v) for v in diagnosis.undominated)}')
