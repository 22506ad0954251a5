"""
test_model
~~~~~~~~~~

Unit tests for :mod:`pjbv.report.model`.
"""
import pytest as pt

from pjbv import report as rp


# Test cases.
class TestInputError:
    def test_message(self):
        """Given a row and a field, :class:`InputError` should name
        them before the message.
        """
        ex = rp.InputError('Bad.', 3, 'x')
        assert str(ex) == "row 3, field 'x': Bad."
        assert str(rp.InputError('Bad.')) == 'Bad.'
        assert isinstance(ex, ValueError)


class TestRunConfig:
    def test_defaults(self):
        """Given a source and scales, :class:`RunConfig` should fill
        in the defaults.
        """
        config = rp.RunConfig('analyze', input='a.csv', scales=(0.2, 0.4))
        assert config.fmt == 'json'
        assert config.window_stride == 0.05
        assert rp.RunConfig('verify').suite == 'all'

    @pt.mark.parametrize('kwargs,field', [
        ({'scales': (0.5,)}, '--input'),
        ({'input': 'a', 'signal_json': 'b', 'scales': (0.5,)}, '--input'),
        ({'input': 'a'}, '--scales'),
        ({'input': 'a', 'scales': (0.5, 0.0)}, '--scales'),
        ({'input': 'a', 'scales': (0.5,), 'stride': -1.0}, '--stride'),
        ({'input': 'a', 'scales': (0.5,), 'tol': 0.0}, '--tol'),
        ({'input': 'a', 'scales': (0.5,), 'fmt': 'xml'}, '--format'),
    ])
    def test_invalid(self, kwargs, field):
        """Given invalid settings, :class:`RunConfig` should raise
        :class:`InputError` naming the flag.
        """
        with pt.raises(rp.InputError) as ex:
            rp.RunConfig('segment', **kwargs)
        assert ex.value.field == field


class TestCheckResult:
    @pt.mark.parametrize('residual,criterion,passed', [
        (0.5, 'below', True),
        (1.0, 'below', True),
        (1.5, 'below', False),
        (1.5, 'above', True),
        (1.0, 'above', False),
    ])
    def test_judge(self, residual, criterion, passed):
        """Given a residual and a criterion, :meth:`CheckResult.judge`
        should decide whether the check passed.
        """
        result = rp.CheckResult.judge('spam', 1, residual, 1.0, criterion)
        assert result.passed is passed
        assert result.asdict()['criterion'] == criterion
