from graphs.serializers import EccentricityProfileSerializer
from graphs.services.graph_core import eccentricity_profile, format_distance
from utils.commands import GraphCommand, load_graph, usage_error


class Command(GraphCommand):
    help = 'Print per-vertex eccentricities, radius, diameter and the self-centered flag of a graph'

    def add_arguments(self, parser):
        parser.add_argument(
            'file',
            type=str,
            help='Edge-list graph file'
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        g, indexing = load_graph(options['file'])

        profile = eccentricity_profile(g)
        if not profile.connected:
            raise usage_error(f"{options['file']}: graph is disconnected, eccentricities are infinite")

        if output_format == 'records':
            self.write_records([('eccentricity', EccentricityProfileSerializer(profile).data)])
            return

        for v, e in enumerate(profile.ecc):
            label = f" {indexing.label(v)}" if indexing else ''
            self.stdout.write(f'vertex {v}{label}: eccentricity {format_distance(e)}')
        self.stdout.write(f'radius: {format_distance(profile.radius)}')
        self.stdout.write(f'diameter: {format_distance(profile.diameter)}')
        self.stdout.write(f'self-centered: {"yes" if profile.self_centered else "no"}')
        self.stdout.write(f'center: {",".join(str(v) for v in profile.center())}')
