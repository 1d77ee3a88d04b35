import json

from omegalie.report import ReportTable


def test_report_collects_passes_and_failures():
    table = ReportTable("demo")
    with table.timed("passes") as rec:
        rec.expect(True)
    with table.timed("fails") as rec:
        rec.expect(False, "broken invariant")
    with table.timed("crashes") as rec:
        raise RuntimeError("boom")
    assert not table.ok
    assert [c.ok for c in table.checks] == [True, False, False]
    assert "broken invariant" in table.checks[1].detail
    assert "RuntimeError" in table.checks[2].detail


def test_report_render_formats():
    table = ReportTable("demo")
    with table.timed("one") as rec:
        rec.expect(True)
    table.add_note("remember this")
    human = table.render()
    assert "PASS" in human and "remember this" in human
    machine = table.render(machine=True)
    lines = [json.loads(ln) for ln in machine.splitlines()]
    assert lines[0]["check"] == "one" and lines[0]["ok"] is True
    assert lines[-1] == {"suite": "demo", "ok": True}
