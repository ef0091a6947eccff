import logging

import pytest

from graphs.exceptions import DisconnectedGraphError
from utils.logging_utils import LoggingContextManager, get_logger, log_exceptions, log_performance

LOGGER_NAME = 'graph_analysis.tests'


@pytest.fixture
def captured(caplog):
    caplog.set_level(logging.DEBUG, logger=LOGGER_NAME)
    return caplog


@pytest.mark.unit
class TestGraphAnalysisLogger:
    """Test the domain logging helpers"""

    def test_check_result_levels(self, captured):
        """Test passed checks log INFO, failed and vacuous ones WARNING"""
        logger = get_logger(LOGGER_NAME)

        logger.log_check_result('T1', 36, 0, 0)
        logger.log_check_result('T5', 0, 36, 0)
        logger.log_check_result('T3', 10, 2, 1)

        levels = [(r.levelno, r.getMessage()) for r in captured.records]
        assert levels[0][0] == logging.INFO and 'Check T1 passed' in levels[0][1]
        assert levels[1][0] == logging.WARNING and 'vacuously' in levels[1][1]
        assert levels[2][0] == logging.WARNING and 'Check T3 FAILED' in levels[2][1]

    def test_search_result(self, captured):
        """Test search outcomes log at DEBUG"""
        logger = get_logger(LOGGER_NAME)

        logger.log_search_result('comfortable team', 5, None)
        logger.log_search_result('dominating set', 6, 2)

        messages = [r.getMessage() for r in captured.records]
        assert 'no witness at any size' in messages[0]
        assert 'minimum size 2' in messages[1]
        assert all(r.levelno == logging.DEBUG for r in captured.records)

    def test_counterexample(self, captured):
        """Test counterexamples log at WARNING"""
        get_logger(LOGGER_NAME).log_counterexample('T1', 'vertex 0', '3', '2')

        assert captured.records[0].levelno == logging.WARNING
        assert 'Expected: 3, Actual: 2' in captured.records[0].getMessage()


@pytest.mark.unit
class TestDecorators:
    """Test the logging decorators"""

    def test_expected_exceptions_log_warning(self, captured):
        """Test rejected input is logged without a traceback and re-raised"""

        @log_exceptions(LOGGER_NAME, expected=(DisconnectedGraphError,))
        def solve():
            raise DisconnectedGraphError("graph is disconnected")

        with pytest.raises(DisconnectedGraphError):
            solve()

        record = captured.records[0]
        assert record.levelno == logging.WARNING
        assert record.exc_info is None

    def test_unexpected_exceptions_log_error(self, captured):
        """Test other exceptions are logged with a traceback"""

        @log_exceptions(LOGGER_NAME)
        def solve():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            solve()

        record = captured.records[0]
        assert record.levelno == logging.ERROR
        assert record.exc_info is not None

    def test_performance_threshold(self, captured):
        """Test slow calls log WARNING and fast ones DEBUG"""

        @log_performance(LOGGER_NAME, threshold=-1.0)
        def always_slow():
            return 1

        @log_performance(LOGGER_NAME, threshold=60.0)
        def fast():
            return 2

        assert always_slow() == 1
        assert fast() == 2
        assert captured.records[0].levelno == logging.WARNING
        assert 'Slow execution detected - always_slow' in captured.records[0].getMessage()
        assert captured.records[1].levelno == logging.DEBUG


@pytest.mark.unit
class TestLoggingContextManager:
    """Test structured start and end logging"""

    def test_success(self, captured):
        """Test start and completion records carry the context"""
        with LoggingContextManager(get_logger(LOGGER_NAME), 'check T1', check_id='T1'):
            pass

        start, end = captured.records
        assert start.getMessage() == 'Starting check T1'
        assert 'Completed check T1 successfully' in end.getMessage()
        assert end.check_id == 'T1'

    def test_failure(self, captured):
        """Test failures are logged and not swallowed"""
        with pytest.raises(ValueError):
            with LoggingContextManager(get_logger(LOGGER_NAME), 'scan'):
                raise ValueError("bad corpus")

        assert captured.records[-1].levelno == logging.ERROR
        assert 'Failed scan' in captured.records[-1].getMessage()
