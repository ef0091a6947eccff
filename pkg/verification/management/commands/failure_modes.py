from graphs.exceptions import GraphAnalysisError
from utils.commands import GraphCommand, describe_error, usage_error
from verification.management.commands.verify import add_corpus_arguments, corpus_from_options
from verification.serializers import (
    FailureModeEntrySerializer,
    FailureModeReportSerializer,
    ProductFindingSerializer,
)
from verification.services.failure_modes import find_failure_modes, render_failure_modes


class Command(GraphCommand):
    help = 'List the corpus graphs without a comfortable team and show what blocks each one'

    def add_arguments(self, parser):
        add_corpus_arguments(parser)
        parser.add_argument(
            '--explore-products',
            action='store_true',
            help='Also search products where a factor has no team; hits are reported as OPEN findings',
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        corpus = corpus_from_options(options)
        try:
            report = find_failure_modes(corpus, explore_products=options['explore_products'])
        except GraphAnalysisError as e:
            raise usage_error(describe_error(e))

        if output_format == 'records':
            records = [('failure_modes', FailureModeReportSerializer(report).data)]
            records.extend(('no_team_graph', FailureModeEntrySerializer(e).data) for e in report.entries)
            records.extend(('open_finding', ProductFindingSerializer(f).data) for f in report.findings)
            self.write_records(records)
            return
        self.stdout.write(render_failure_modes(report), ending='')
