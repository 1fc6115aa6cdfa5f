import pytest

from charsheaf import caseio, lusztig


class _Cases:
    def __init__(self):
        self._bundles = {}
        self._results = {}

    def bundle(self, name):
        if name not in self._bundles:
            self._bundles[name] = caseio.load_named(name)
        return self._bundles[name]

    def result(self, name):
        if name not in self._results:
            self._results[name] = lusztig.run_case(self.bundle(name))
        return self._results[name]


@pytest.fixture(scope="session")
def cases():
    return _Cases()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
