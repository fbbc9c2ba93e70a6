import os

import hypothesis
import numpy as np
import pytest

from varlp.group import build_cyclic, build_dihedral, build_symmetric

np.seterr(all="raise", under="ignore")

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=400, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def z2():
    return build_cyclic(2)


@pytest.fixture
def z4():
    return build_cyclic(4)


@pytest.fixture
def s3():
    return build_symmetric(3)


@pytest.fixture
def d4():
    return build_dihedral(4)
