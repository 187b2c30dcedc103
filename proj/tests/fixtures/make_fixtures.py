#!/usr/bin/env python3
"""Generates the synthetic repositories used by the test suites.

Every Java file revision is built from a recipe (kind, code lines, named
classes, test commands). The generator labels each emitted line as code or
not while writing it, so the expected counts in the oracle files come from
the recipes, never from the analyzer under test.

Usage: make_fixtures.py <fixtures-dir>
"""

import datetime
import json
import os
import shutil
import sys


class Source:
    def __init__(self):
        self.lines = []  # (text, is_code)

    def code(self, text):
        self.lines.append((text, True))

    def other(self, text=""):
        self.lines.append((text, False))

    def code_lines(self):
        return sum(1 for _, c in self.lines if c)

    def text(self):
        return "\n".join(t for t, _ in self.lines) + "\n"


def java(pkg, name, kind, loc, nested=0, anon=0, commands=0, style="junit3", distractor=False):
    """kind: 'P' production or 'T' test. Returns (text, facts)."""
    s = Source()
    s.other("// " + name + ".java")
    s.other("/*")
    s.other(" * Synthetic fixture source.")
    s.other(" */")
    s.code("package " + pkg + ";")
    s.other()
    if kind == "T" and style == "junit3":
        s.code("import junit.framework.TestCase;")
    elif kind == "T":
        s.code("import org.junit.Before;")
        s.code("import org.junit.Test;")
        s.code("import static org.junit.Assert.assertTrue;")
    else:
        s.code("import java.util.List;")
    s.other()
    s.other("/**")
    s.other(" * " + name + " class comment mentioning class Decoy and testNothing().")
    s.other(" */")
    extends = " extends TestCase" if kind == "T" and style == "junit3" else ""
    s.code("public class " + name + extends + " {")
    s.code("    private int counter = 0; // trailing comment counts as code")
    if kind == "P":
        s.code('    private String label = "class Fake extends TestCase";')
        s.other("    // public void testCommentedOut() {")
    if kind == "T":
        if style == "junit3":
            s.code("    protected void setUp() throws Exception { super.setUp(); counter = 1; }")
        else:
            s.code("    @Before")
            s.code("    public void setUp() { counter = 1; }")
        s.other()
        for i in range(commands):
            if style == "junit4":
                s.code("    @Test")
            s.code("    public void testCase%d() {" % i)
            s.code("        assertTrue(counter >= %d - %d);" % (i, i))
            s.code("    }")
        if distractor:
            s.code("    private final boolean testify = Probe.testify();")
            s.code("    private boolean check() { return testify(); }")
            s.other("    /* public void testInComment() { } */")
    for i in range(nested):
        s.other()
        s.code("    static class Helper%d {" % i)
        s.code("        int value = %d;" % i)
        s.code("    }")
    if anon:
        s.code("    void wire() {")
        for i in range(anon):
            s.code("        Runnable r%d = new Runnable() {" % i)
            s.code("            public void run() { counter++; }")
            s.code("        };")
        s.code("    }")
    base = s.code_lines() + 1  # closing brace
    if loc < base or loc == base + 1:
        raise ValueError("%s: loc %d not reachable (base %d)" % (name, loc, base))
    if loc > base:
        s.code("    void fill() {")
        for i in range(loc - base - 2):
            if i % 7 == 3:
                s.other()
            if i % 11 == 5:
                s.other("        // step %d" % i)
            s.code("        counter += %d;" % (i % 5))
        s.code("    }")
    s.code("}")
    assert s.code_lines() == loc, (name, s.code_lines(), loc)
    facts = {"kind": "TestCode" if kind == "T" else "ProductionCode", "loc": loc,
             "classes": 1 + nested, "commands": commands if kind == "T" else 0}
    return s.text(), facts


def java_path(path, kind, loc, **kw):
    pkg = os.path.dirname(path).replace("/", ".")
    name = os.path.splitext(os.path.basename(path))[0]
    return java(pkg, name, kind, loc, **kw)


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", newline="\n") as f:
        f.write(text)


def build_repo(root, commits, vcs_id, timestamp, releases, coverage):
    """commits: list of (author, [(path, 'A'|'M'|'D', recipe-or-None)])."""
    if os.path.exists(root):
        shutil.rmtree(root)
    os.makedirs(root)
    live = {}
    log_lines, kinds, metrics, commit_rows = [], [], [], []
    for i, (author, changes) in enumerate(commits, start=1):
        vid = vcs_id(i)
        record = {"vcs_id": vid, "timestamp": timestamp(i), "author": author,
                  "changes": [{"path": p, "kind": k} for p, k, _ in changes]}
        log_lines.append(json.dumps(record))
        commit_rows.append((i, vid, author, len(changes)))
        for path, kind, recipe in changes:
            if kind == "D":
                live.pop(path, None)
                continue
            if path.endswith(".java"):
                text, facts = java_path(path, *recipe[0], **recipe[1])
            else:
                text, facts = recipe, {"kind": "Other", "loc": 0, "classes": 0, "commands": 0}
            write(os.path.join(root, "content", vid, path), text)
            live[path] = facts
            kinds.append((i, path, facts["kind"], facts["loc"], facts["classes"], facts["commands"]))
        m = [0, 0, 0, 0, 0]
        for f in live.values():
            if f["kind"] == "ProductionCode":
                m[0] += f["loc"]
                m[2] += f["classes"]
            elif f["kind"] == "TestCode":
                m[1] += f["loc"]
                m[3] += f["classes"]
                m[4] += f["commands"]
        metrics.append([i] + m)
    write(os.path.join(root, "log.jsonl"), "\n".join(log_lines) + "\n")
    write(os.path.join(root, "releases.tsv"), "".join("%s\t%s\n" % r for r in releases))
    write(os.path.join(root, "coverage.txt"), coverage)
    write(os.path.join(root, "oracle_commits.tsv"),
          "rev\tvcs_id\tauthor\tchanges\n" + "".join("%d\t%s\t%s\t%d\n" % r for r in commit_rows))
    write(os.path.join(root, "oracle_kinds.tsv"),
          "rev\tpath\tkind\tloc\tclasses\tcommands\n" + "".join("%d\t%s\t%s\t%d\t%d\t%d\n" % k for k in kinds))
    write(os.path.join(root, "oracle_metrics.tsv"),
          "rev\tpLOC\ttLOC\tpClasses\ttClasses\ttCommands\n" +
          "".join("\t".join(str(v) for v in row) + "\n" for row in metrics))


def P(loc, **kw):
    return (("P", loc), kw)


def T(loc, commands, style="junit3", **kw):
    kw.update(commands=commands, style=style)
    return (("T", loc), kw)


def fixture30(root):
    A, B, C = "alice", "bob", "carol"
    commits = [
        (A, [("README.md", "A", "JPacman-like fixture\n"), ("src/app/Board.java", "A", P(40, nested=1)),
             ("src/app/Engine.java", "A", P(60)), ("src/util/Board.java", "A", P(20))]),
        (A, [("src/app/Player.java", "A", P(35)), ("src/app/BoardTest.java", "A", T(30, 3))]),
        (B, [("src/app/Board.java", "M", P(48, nested=1))]),
        (B, [("src/app/Ghost.java", "A", P(50, anon=2))]),
        (A, [("src/app/Engine.java", "M", P(70))]),
        (C, [("src/util/Board.java", "M", P(24))]),
        (C, [("src/app/Player.java", "M", P(45)), ("README.md", "M", "JPacman-like fixture, v2\n")]),
        (A, [("src/app/PlayerTest.java", "A", T(28, 2, "junit4"))]),
        (B, [("src/app/BoardTest.java", "M", T(40, 4, distractor=True))]),
        (B, [("src/app/Ghost.java", "M", P(60, anon=2))]),
        (C, [("src/app/AllIntegrationTest.java", "A", T(25, 2))]),
        (A, [("src/app/Engine.java", "M", P(80)), ("src/app/Player.java", "M", P(50))]),
        (A, [("src/app/PlayerTest.java", "M", T(36, 3, "junit4"))]),
        (B, [("src/util/Board.java", "M", P(30, nested=1))]),
        (C, [("src/app/Engine.java", "D", None), ("src/core/Engine.java", "A", P(80))]),
        (A, [("src/app/Board.java", "M", P(55, nested=2))]),
        (B, [("src/core/Engine.java", "M", P(90))]),
        (B, [("src/core/EngineTest.java", "A", T(30, 3))]),
        (C, [("src/app/Ghost.java", "M", P(62, anon=3))]),
        (A, [("src/app/BoardTest.java", "M", T(44, 5, distractor=True))]),
        (C, [("src/app/AllIntegrationTest.java", "M", T(35, 3))]),
        (A, [("src/app/GhostTest.java", "A", T(26, 2, "junit4"))]),
        (B, [("src/app/GhostTest.java", "M", T(34, 3, "junit4"))]),
        (B, [("src/core/EngineTest.java", "M", T(42, 4))]),
        (C, [("src/app/PlayerTest.java", "M", T(40, 4, "junit4"))]),
        (A, [("src/app/Player.java", "M", P(58)), ("src/app/PlayerTest.java", "M", T(46, 5, "junit4"))]),
        (A, [("src/app/Board.java", "M", P(60, nested=2)), ("README.md", "M", "JPacman-like fixture, v3\n")]),
        (B, [("src/util/Board.java", "M", P(32, nested=1))]),
        (C, [("src/core/Engine.java", "M", P(96)), ("src/core/EngineTest.java", "M", T(48, 5))]),
        (A, [("src/app/Ghost.java", "M", P(66, anon=3)), ("src/app/GhostTest.java", "M", T(38, 4, "junit4"))]),
    ]
    assert len(commits) == 30
    start = datetime.datetime(2006, 3, 1, 9, 0, 0)

    def ts_dt(i):
        if i == 13:
            return ts_dt(12)  # tie
        j = i - 1 if i > 13 else i
        return start + datetime.timedelta(days=j, hours=(i * 5) % 7)

    def ts(i):
        return ts_dt(i).strftime("%Y-%m-%dT%H:%M:%SZ")

    vcs = lambda i: "r%d" % (100 + 3 * i)
    between = (ts_dt(16) + (ts_dt(17) - ts_dt(16)) / 2).strftime("%Y-%m-%dT%H:%M:%SZ")
    releases = [("1.0", vcs(8)), ("1.1", between), ("2.0", vcs(30))]
    coverage = ("# release class method block statement\n"
                "1.0 80 62.5 70 66\n"
                "1.1 75 60 - 64.25\n"
                "2.0 90 81 77.5 79\n")
    build_repo(root, commits, vcs, ts, releases, coverage)

    # Hand-built expectations: role and unit pairing per entity, rows.
    entities = [
        # path, introduced, deleted, role, partner, row
        ("src/app/Board.java", 1, "-", "production", "src/app/BoardTest.java", 0),
        ("src/app/Engine.java", 1, 15, "production", "-", 1),
        ("src/util/Board.java", 1, "-", "production", "-", 2),
        ("src/app/BoardTest.java", 2, "-", "unit_test", "src/app/Board.java", 0),
        ("src/app/Player.java", 2, "-", "production", "src/app/PlayerTest.java", 3),
        ("src/app/Ghost.java", 4, "-", "production", "src/app/GhostTest.java", 4),
        ("src/app/PlayerTest.java", 8, "-", "unit_test", "src/app/Player.java", 3),
        ("src/app/AllIntegrationTest.java", 11, "-", "integration_test", "-", 6),
        ("src/core/Engine.java", 15, "-", "production", "src/core/EngineTest.java", 5),
        ("src/core/EngineTest.java", 18, "-", "unit_test", "src/core/Engine.java", 5),
        ("src/app/GhostTest.java", 22, "-", "unit_test", "src/app/Ghost.java", 4),
    ]
    write(os.path.join(root, "oracle_entities.tsv"),
          "path\tintroduced_rev\tdeleted_rev\trole\tpartner\trow\n" +
          "".join("%s\t%s\t%s\t%s\t%s\t%s\n" % e for e in entities))


def quadruples(root):
    commits = [
        ("dev", [("src/Main.java", "A", P(935)), ("src/MainTest.java", "A", T(65, 4))]),
        ("dev", [("src/Main.java", "M", P(930)), ("src/MainTest.java", "M", T(70, 5))]),
    ]
    ts = lambda i: "2007-0%d-01T12:00:00Z" % i
    vcs = lambda i: ["cs24", "argo014"][i - 1]
    coverage = "2.4 81 75 84 57\n0.14 22 14 8.9 10\n"
    build_repo(root, commits, vcs, ts, [("2.4", "cs24"), ("0.14", "argo014")], coverage)


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(os.path.abspath(__file__))
    fixture30(os.path.join(out, "fixture30"))
    quadruples(os.path.join(out, "quadruples"))


if __name__ == "__main__":
    main()
