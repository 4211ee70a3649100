import random

import pytest

from glmy.chain import build_complex
from glmy.digraph import parse_edge_list

EXAMPLE_1 = "1->2\n1->3\n1->4\n2->3\n2->4\n3->4"
EXAMPLE_2 = "0->1\n0->2\n1->3\n1->4\n2->3\n2->4\n5->3\n5->4"

CORPUS_SIZE = 200
CORPUS_SEED = 20240917


def random_dag_text(rng: random.Random, n: int, p: float) -> str:
    """Edges go forward in a shuffled vertex order, so the result is acyclic."""
    order = list(range(n))
    rng.shuffle(order)
    lines = [str(v) for v in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                lines.append(f"{order[i]}->{order[j]}")
    return "\n".join(lines)


def corpus_texts(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[str]:
    rng = random.Random(seed)
    return [random_dag_text(rng, rng.choice((2, 3, 4, 4, 5, 5, 6, 6, 6)), rng.choice((0.3, 0.45, 0.6, 0.8))) for _ in range(size)]


@pytest.fixture(scope="session")
def ex1():
    return parse_edge_list(EXAMPLE_1)


@pytest.fixture(scope="session")
def ex2():
    return parse_edge_list(EXAMPLE_2)


@pytest.fixture(scope="session")
def cx1(ex1):
    return build_complex(ex1)


@pytest.fixture(scope="session")
def cx2(ex2):
    return build_complex(ex2)


@pytest.fixture(scope="session")
def corpus():
    return [parse_edge_list(t) for t in corpus_texts()]


@pytest.fixture(scope="session")
def corpus_complexes(corpus):
    return [build_complex(g) for g in corpus]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
