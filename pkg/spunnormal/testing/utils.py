from functools import wraps
from typing import Any, Callable, Sequence


def parameterize(argument: str, values: Sequence[Any]) -> Callable:
    """Runs the wrapped check once per value of ``argument`` inside a single call, so an expensive
    object (an enumerated complex, a folded fan) is built once and shared by every case.
    Stacked decorators iterate over the product of their values. Remaining arguments must be
    passed by keyword.

    Usage::

        @parameterize('tet', [0, 1])
        @parameterize('label', [0, 1, 2])
        def check_corner(tet, label, pf):
            ...

        check_corner(pf=pf)

    :param argument: Name of the keyword argument that receives each value
    :type argument: str
    :param values: The values to run the check with, in order
    :type values: Sequence[Any]
    """

    def _wrapper(func):

        @wraps(func)
        def _run_all(**kwargs):
            for val in values:
                func(**{argument: val}, **kwargs)

        return _run_all

    return _wrapper
