# Copyright 2026 The qmagic Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Prepends the Apache-2.0 license header to C++, Python and CMake sources."""

import pathlib
import sys

YEAR_OWNER = "Copyright 2026 The qmagic Authors"
BODY = [
    YEAR_OWNER,
    "",
    'Licensed under the Apache License, Version 2.0 (the "License");',
    "you may not use this file except in compliance with the License.",
    "You may obtain a copy of the License at",
    "",
    "     http://www.apache.org/licenses/LICENSE-2.0",
    "",
    "Unless required by applicable law or agreed to in writing, software",
    'distributed under the License is distributed on an "AS IS" BASIS,',
    "WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.",
    "See the License for the specific language governing permissions and",
    "limitations under the License.",
]

DIRS = ["include", "src", "tests", "tools", "python"]
SKIP_PARTS = {"build", "__pycache__", "vendor"}


def header(prefix: str) -> str:
    return "\n".join((prefix + " " + line).rstrip() for line in BODY) + "\n\n"


def style(path: pathlib.Path):
    if path.suffix in {".cpp", ".hpp", ".h", ".cc"}:
        return "//"
    if path.suffix in {".py", ".cmake"} or path.name == "CMakeLists.txt":
        return "#"
    return None


def main(root: pathlib.Path) -> int:
    changed = 0
    paths = [root / "CMakeLists.txt"]
    for d in DIRS:
        paths += sorted(p for p in (root / d).rglob("*") if p.is_file())
    for path in paths:
        if SKIP_PARTS & set(path.parts):
            continue
        prefix = style(path)
        if prefix is None:
            continue
        text = path.read_text()
        if YEAR_OWNER in text.split("\n", 1)[0]:
            continue
        path.write_text(header(prefix) + text)
        changed += 1
    print(f"added headers to {changed} files")
    return 0


if __name__ == "__main__":
    sys.exit(main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".").resolve()))
