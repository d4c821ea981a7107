import pytest

from sgapshift.corpus import default_corpus
from sgapshift.gapset import canonicalize


@pytest.fixture(scope="session")
def corpus():
    """Canonical specs of the bundled corpus, duplicates removed."""
    seen, out = set(), []
    for _, spec in default_corpus():
        spec = canonicalize(spec)
        if spec not in seen:
            seen.add(spec)
            out.append(spec)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
