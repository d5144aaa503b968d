import pytest

_CRITERIA: dict[str, list[tuple[bool, str]]] = {}


class CriterionLog:
    def __init__(self, name: str):
        self.name = name
        _CRITERIA.setdefault(name, [])

    def check(self, ok: bool, detail: str) -> None:
        _CRITERIA[self.name].append((bool(ok), detail))
        assert ok, f"{self.name}: {detail}"


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    return CriterionLog(marker.args[0] if marker else request.node.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        checks = _CRITERIA[name]
        ok = bool(checks) and all(c for c, _ in checks)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
        for c, detail in checks:
            if not c:
                terminalreporter.write_line(f"        failed: {detail}")
