import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def diagram_pair():
    from cycbrauer.diagrams import LabelledDiagram
    x = LabelledDiagram.build(6, 6, 3, [(1, 2, 4), (5, 6, 1), (3, 7, 0), (4, 8, 1),
                                        (9, 12, 1), (10, 11, 2)])
    y = LabelledDiagram.build(6, 6, 3, [(1, 8, 1), (2, 7, 3), (3, 5, 1), (4, 6, 5),
                                        (9, 10, 1), (11, 12, 1)])
    return x, y


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
