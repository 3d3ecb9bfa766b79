import doctest

import pytest

from symshift import bitstrings, contraction, engine, progression, runvectors


@pytest.mark.parametrize("mod", [bitstrings, contraction, engine, progression, runvectors], ids=lambda m: m.__name__)
def test_docstring_examples(mod):
    failed, _ = doctest.testmod(mod)
    assert failed == 0
