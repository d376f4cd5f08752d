import pytest

from pdcj import _kernels_py

try:
    from pdcj import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

KERNEL_IMPLS = [_kernels_py] + ([_compiled] if _compiled is not None else [])

# criterion number -> (passed, detail); filled in by tests/test_acceptance.py
ACCEPTANCE_RESULTS = {}


@pytest.fixture(params=KERNEL_IMPLS, ids=lambda m: "compiled" if m is _compiled else "pure")
def kern(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
