def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, _, _ in CRITERIA:
        if number not in RESULTS:
            continue
        ok, elapsed, budget = RESULTS[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s of {budget:.0f}s)"
        )
