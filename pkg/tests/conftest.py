import importlib

import pytest
from hypothesis import settings

# factoring a large semiprime can take a few hundred ms; time limits live in the acceptance suite
settings.register_profile("quasicount", deadline=None)
settings.load_profile("quasicount")

# QC(1..40) as tabulated alongside the closed forms
FIRST_40 = [0, 0, 0, 0, 1, 1, 2, 3, 2, 3, 2, 5, 3, 4, 5, 5, 3, 6, 4, 7,
            7, 6, 4, 11, 5, 7, 6, 9, 5, 13, 6, 9, 9, 9, 9, 13, 7, 10, 11, 15]


def _backends():
    mods = [pytest.param(importlib.import_module("quasicount._pykernels"), id="python")]
    try:
        mods.append(pytest.param(importlib.import_module("quasicount._ckernels"), id="cython"))
    except ImportError:
        mods.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    return mods


@pytest.fixture(params=_backends())
def kernels(request):
    return request.param
