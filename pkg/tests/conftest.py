def pytest_terminal_summary(terminalreporter):
    rows = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                rows.append((props["criterion"], status, props))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status, props in sorted(rows, key=lambda row: row[0][0]):
        verdict = "PASS" if status == "passed" else "FAIL"
        detail = f"  [{props['detail']}]" if "detail" in props else ""
        terminalreporter.write_line(f"{verdict}  {number:>2}. {title}{detail}")
        for line in props.get("report", ()):
            terminalreporter.write_line(f"        {line}")
