#!/usr/bin/env python3
"""Export a git repository as a coevo commit log.

Writes one JSON record per commit (oldest first) to stdout. With --content,
also writes every added or modified file revision to DIR/<sha>/<path>, the
layout `coevo --content` reads. Renames become a delete plus an add, so a
moved file starts a new entity. Merges are diffed against their first parent.
Commits without file changes are skipped.
"""

import argparse
import json
import os
import subprocess
import sys

SEP = "\x1e"


def git(repo, *args):
    return subprocess.run(["git", "-C", repo, *args], check=True, capture_output=True).stdout


def commits(repo, rev):
    fmt = SEP + "%H%x00%aI%x00%an"
    out = git(repo, "log", "--reverse", "--first-parent", "-m", "-M",
              "--name-status", "-z", "--format=" + fmt, rev).decode("utf-8", "replace")
    for block in out.split(SEP)[1:]:
        head, _, body = block.partition("\n")
        sha, stamp, author = head.split("\x00")[:3]
        fields = [f for f in body.strip("\n").split("\x00") if f != ""]
        changes = []
        i = 0
        while i < len(fields):
            status = fields[i].strip()
            if status[:1] in ("R", "C"):
                old, new = fields[i + 1], fields[i + 2]
                if status[0] == "R":
                    changes.append({"path": old, "kind": "D"})
                changes.append({"path": new, "kind": "A"})
                i += 3
                continue
            path = fields[i + 1]
            kind = {"A": "A", "D": "D"}.get(status[:1], "M")
            changes.append({"path": path, "kind": kind})
            i += 2
        yield {"vcs_id": sha, "timestamp": stamp, "author": author, "changes": changes}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("repo", help="path to a git working copy")
    ap.add_argument("--rev", default="HEAD", help="revision to walk back from")
    ap.add_argument("--content", help="directory to materialize file revisions into")
    args = ap.parse_args()

    for record in commits(args.repo, args.rev):
        if not record["changes"]:
            continue
        if args.content:
            for change in record["changes"]:
                if change["kind"] == "D":
                    continue
                target = os.path.join(args.content, record["vcs_id"], change["path"])
                os.makedirs(os.path.dirname(target), exist_ok=True)
                with open(target, "wb") as f:
                    f.write(git(args.repo, "show", f"{record['vcs_id']}:{change['path']}"))
        sys.stdout.write(json.dumps(record) + "\n")


if __name__ == "__main__":
    main()
