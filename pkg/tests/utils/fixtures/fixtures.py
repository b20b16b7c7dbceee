#!/usr/bin/python
# Copyright 2024 The tangential-polygons Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

import os
import tempfile
import zlib

import numpy as np
import pytest
from ..common import (
    ReadFileLock,
    WriteFileLock,
    get_worker_count,
    make_tempdir,
)

LOCK_FILE = os.path.join(tempfile.gettempdir(), "tangential.exclusive.test.lock")


@pytest.fixture(scope="function", autouse=True)
def exclusivity(request):
    if get_worker_count() == 1:
        # Nothing runs alongside.
        yield None
        return

    if request.node.get_closest_marker("exclusive"):
        lock = WriteFileLock(LOCK_FILE)
    else:
        lock = ReadFileLock(LOCK_FILE)

    lock.acquire()
    try:
        yield lock
    finally:
        lock.release()


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def fuzz_scale(request):
    return request.config.getoption("--fuzz-scale")


@pytest.fixture(scope="session")
def timing_slack(request):
    return request.config.getoption("--timing-slack")


@pytest.fixture(scope="function")
def rng(request, seed):
    """Generator seeded from --seed and the test id, independent of order
    and of the xdist worker the test lands on."""
    return np.random.default_rng([seed, zlib.crc32(request.node.nodeid.encode())])


@pytest.fixture(scope="function")
def fuzz_count(fuzz_scale):
    def count(n):
        return max(1, int(round(n * fuzz_scale)))

    return count


@pytest.fixture(scope="function")
def workdir():
    with make_tempdir() as tdir:
        yield tdir


@pytest.fixture(scope="function", autouse=True)
def acceptance_test(request):
    mark = request.node.get_closest_marker("acceptance")
    option_no = request.config.getoption("--no-acceptance-tests")
    option_only = request.config.getoption("--only-acceptance-tests")
    if mark and option_no:
        pytest.skip("Not running acceptance tests.")
    if not mark and option_only:
        pytest.skip("Running only acceptance tests.")
