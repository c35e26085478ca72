from fractions import Fraction

import attr
import numpy as np

from help_psl2.cyclotomic import CycloSum
from help_psl2.psl2 import BrauerChar
from .utils import format_fraction


def format_as_dict(obj):
    """ Return a dictionary representing a result object (or any part of it)
    that can be JSON-encoded. Rationals become ``"num/den"`` strings,
    sums of roots of unity become ``{"conductor": n, "terms": [[e, c], ...]}``
    and dictionary keys become strings.
    """
    return _to_python(obj)


def _to_python(obj):
    """ Convert an attrs object or a nested dict/list/tuple that might
    contain rationals, cyclotomic sums or numpy objects to JSON-ready
    python. Return converted object.
    """
    if isinstance(obj, CycloSum):
        return {'conductor': obj.conductor,
                'terms': [[e, c] for e, c in obj.terms()]}
    elif isinstance(obj, BrauerChar):
        return {'k': obj.k, 'degree': obj.degree}
    elif isinstance(obj, Fraction):
        return format_fraction(obj)
    elif attr.has(type(obj)):
        return _to_python(attr.asdict(obj, recurse=False))
    elif isinstance(obj, dict):
        return {str(k): _to_python(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple, np.ndarray)):
        return [_to_python(x) for x in obj]
    elif hasattr(obj, 'dtype') and np.isscalar(obj):
        if np.issubdtype(obj.dtype, np.integer):
            return int(obj)
        elif np.issubdtype(obj.dtype, np.bool_):
            return bool(obj)
        elif np.issubdtype(obj.dtype, np.floating):
            return float(obj)
    return obj
