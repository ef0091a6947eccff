from graphs.exceptions import CorpusBoundsError, GraphAnalysisError, UnknownCheckError
from utils.commands import GraphCommand, describe_error, negative_outcome, usage_error
from utils.logging_utils import get_logger
from verification.serializers import CounterexampleSerializer, VerificationReportSerializer
from verification.services.checks import CHECKS, VerificationService, render_report
from verification.services.corpus import CorpusSpec

logger = get_logger(__name__)


def corpus_from_options(options) -> CorpusSpec:
    """Build the corpus from the shared --exhaustive / --random flags"""
    exhaustive, count = options.get('exhaustive'), options.get('random')
    if (exhaustive is None) == (count is None):
        raise usage_error('Give exactly one corpus: --exhaustive N or --random COUNT')
    if exhaustive is not None:
        corpus = CorpusSpec.exhaustive(exhaustive)
    else:
        if options.get('seed') is not None and options['seed'] < 0:
            raise usage_error(f"Seed must be non-negative, got {options['seed']}")
        corpus = CorpusSpec.random(
            count=count,
            n_min=options['nmin'],
            n_max=options['nmax'],
            edge_prob=options['p'],
            seed=options['seed'],
        )
    try:
        corpus.validate()
    except CorpusBoundsError as e:
        raise usage_error(str(e))
    return corpus


def add_corpus_arguments(parser):
    parser.add_argument('--exhaustive', type=int, default=None, metavar='N',
                        help='All connected labeled graphs with 1..N vertices')
    parser.add_argument('--random', type=int, default=None, metavar='COUNT',
                        help='COUNT seeded random connected graphs (pairs for checks)')
    parser.add_argument('--nmin', type=int, default=4, help='Smallest random order (default: 4)')
    parser.add_argument('--nmax', type=int, default=6, help='Largest random order (default: 6)')
    parser.add_argument('--p', type=float, default=0.5, help='Random edge probability (default: 0.5)')
    parser.add_argument('--seed', type=int, default=42, help='Random corpus seed (default: 42)')


class Command(GraphCommand):
    help = 'Machine-verify the strong and lexicographic product theorems and properties over a graph corpus'

    def add_arguments(self, parser):
        parser.add_argument(
            'check_ids',
            nargs='+',
            type=str,
            help=f'One or more checks: {", ".join(CHECKS)}'
        )
        add_corpus_arguments(parser)
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        service = VerificationService()
        check_ids = []
        for check_id in options['check_ids']:
            try:
                check_ids.append(service.definition(check_id).check_id)
            except UnknownCheckError as e:
                raise usage_error(str(e))
        corpus = corpus_from_options(options)

        failed = []
        for check_id in check_ids:
            try:
                report = service.run_check(check_id, corpus)
            except CorpusBoundsError as e:
                raise usage_error(str(e))
            except GraphAnalysisError as e:
                raise usage_error(describe_error(e))

            if output_format == 'records':
                records = [('report', VerificationReportSerializer(report).data)]
                records.extend(('counterexample', CounterexampleSerializer(c).data) for c in report.counterexamples)
                self.write_records(records)
            else:
                self.stdout.write(render_report(report), ending='')
            if not report.passed:
                failed.append(check_id)

        if failed:
            raise negative_outcome(f"Counterexamples found for {', '.join(failed)}")
