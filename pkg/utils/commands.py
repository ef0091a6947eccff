"""
Shared plumbing for the management commands: input loading, exit codes and
output formats.
"""
from pathlib import Path
from typing import Iterable, Optional, Tuple

from django.core.management.base import BaseCommand, CommandError

from graphs.exceptions import GraphAnalysisError, GraphFormatError
from graphs.services.graph_core import Graph, parse_graph
from graphs.services.products import ProductIndexing, read_product_indexing
from utils.logging_utils import get_logger
from utils.records import render_records

logger = get_logger(__name__)

# exit code 1 is reserved for negative mathematical outcomes
NEGATIVE_OUTCOME = 1
USAGE_ERROR = 2

OUTPUT_FORMATS = ('text', 'records')


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=USAGE_ERROR)


def negative_outcome(message: str) -> CommandError:
    return CommandError(message, returncode=NEGATIVE_OUTCOME)


def describe_error(error: Exception) -> str:
    if isinstance(error, GraphFormatError):
        return '; '.join(error.messages)
    return str(error)


def load_graph(path: str) -> Tuple[Graph, Optional[ProductIndexing]]:
    """
    Read an edge-list file.

    Returns:
        (graph, indexing): indexing is present when the file was written by
        the product command
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        logger.log_input_error(path, e)
        raise usage_error(f"Cannot read {path}: {e.strerror or e}")
    except UnicodeDecodeError as e:
        logger.log_input_error(path, e)
        raise usage_error(f"{path}: not a UTF-8 text file (byte {e.start}: {e.reason})")
    try:
        g = parse_graph(text)
    except GraphFormatError as e:
        logger.log_input_error(path, e)
        raise usage_error(f"{path}: {describe_error(e)}")
    indexing = read_product_indexing(text)
    if indexing is not None and indexing.order != g.n:
        indexing = None
    return g, indexing


class GraphCommand(BaseCommand):
    """Base command with the `--format text|records` switch"""

    def add_format_argument(self, parser):
        parser.add_argument(
            '--format',
            default='text',
            help='Output format: text (default) or records (one JSON record per line)',
        )

    def output_format(self, options) -> str:
        output_format = options.get('format') or 'text'
        if output_format not in OUTPUT_FORMATS:
            raise usage_error(f"Invalid format: {output_format}. Must be one of {list(OUTPUT_FORMATS)}")
        return output_format

    def write_records(self, records: Iterable[tuple]) -> None:
        self.stdout.write(render_records(records), ending='')

    def run_service(self, func, *args, **kwargs):
        """Call a service, turning rejected input into a usage error"""
        try:
            return func(*args, **kwargs)
        except (GraphAnalysisError, GraphFormatError) as e:
            raise usage_error(describe_error(e))
