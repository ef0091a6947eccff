from pathlib import Path

from graphs.exceptions import InvalidGraphError
from graphs.serializers import GraphSummarySerializer
from graphs.services.generators import FamilySpec, GraphFamily, gen_family, random_connected
from graphs.services.graph_core import serialize_graph
from utils.commands import GraphCommand, usage_error

RANDOM_FAMILY = 'random'


class Command(GraphCommand):
    help = 'Generate a named family graph or a seeded random connected graph'

    def add_arguments(self, parser):
        families = [family.value for family in GraphFamily] + [RANDOM_FAMILY]
        parser.add_argument(
            'family',
            type=str,
            help=f'Graph family: {", ".join(families)}'
        )
        parser.add_argument('--n', type=int, required=True, help='Number of vertices')
        parser.add_argument('--p', type=float, default=0.5, help='Edge probability (random only)')
        parser.add_argument('--seed', type=int, default=0, help='Non-negative seed (random only)')
        parser.add_argument(
            '--out',
            type=str,
            default=None,
            help='Output file; the graph is printed when omitted'
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        family, n = options['family'], options['n']

        try:
            if family == RANDOM_FAMILY:
                if options['seed'] < 0:
                    raise usage_error(f"Seed must be non-negative, got {options['seed']}")
                g = random_connected(n, options['p'], options['seed'])
                comment = f"random n={n} p={options['p']} seed={options['seed']}"
            else:
                try:
                    spec = FamilySpec(GraphFamily(family), n)
                except ValueError:
                    raise usage_error(
                        f"Invalid family: {family}. Must be one of "
                        f"{[f.value for f in GraphFamily] + [RANDOM_FAMILY]}"
                    )
                g = gen_family(spec)
                comment = f"{family} n={n}"
        except InvalidGraphError as e:
            raise usage_error(str(e))

        text = serialize_graph(g, comment=comment)
        if options['out'] is None:
            self.stdout.write(text, ending='')
            return

        out = Path(options['out'])
        try:
            out.write_text(text, encoding='utf-8')
        except OSError as e:
            raise usage_error(f"Cannot write {out}: {e.strerror or e}")

        if output_format == 'records':
            self.write_records([('graph', {**GraphSummarySerializer(g).data, 'out': str(out)})])
            return
        self.stdout.write(self.style.SUCCESS(f'Wrote {comment} to {out}: {g.n} vertices, {g.m} edges'))
