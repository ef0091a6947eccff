from pathlib import Path

from graphs.serializers import ProductSummarySerializer
from graphs.services.products import PRODUCT_KINDS, build_product, serialize_product
from utils.commands import GraphCommand, load_graph, usage_error
from utils.logging_utils import get_logger

logger = get_logger(__name__)


class Command(GraphCommand):
    help = 'Build the strong or lexicographic product of two graphs and write it in edge-list format'

    def add_arguments(self, parser):
        parser.add_argument(
            'kind',
            type=str,
            help=f'Product kind: {" or ".join(PRODUCT_KINDS)}'
        )
        parser.add_argument('g_file', type=str, help='Edge-list file of the left factor G')
        parser.add_argument('h_file', type=str, help='Edge-list file of the right factor H')
        parser.add_argument(
            'out',
            type=str,
            help='Output edge-list file for the product'
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        output_format = self.output_format(options)
        kind = options['kind']
        # validated here so an unknown kind is a usage error, not a parser error
        if kind not in PRODUCT_KINDS:
            raise usage_error(f"Invalid product kind: {kind}. Must be one of {list(PRODUCT_KINDS)}")

        g, _ = load_graph(options['g_file'])
        h, _ = load_graph(options['h_file'])
        product, idx = build_product(kind, g, h)

        out = Path(options['out'])
        try:
            out.write_text(serialize_product(product, idx, kind), encoding='utf-8')
        except OSError as e:
            raise usage_error(f"Cannot write {out}: {e.strerror or e}")
        logger.info(f"Wrote {kind} product of {g} and {h} to {out}")

        summary = {
            'kind': kind,
            'g_order': g.n,
            'h_order': h.n,
            'n': product.n,
            'm': product.m,
            'out': str(out),
        }
        if output_format == 'records':
            self.write_records([('product', ProductSummarySerializer(summary).data)])
            return

        self.stdout.write(self.style.SUCCESS(f'Wrote {kind} product to {out}'))
        self.stdout.write(f'vertices: {product.n}')
        self.stdout.write(f'edges: {product.m}')
