"""Regenerate the bundled ground-truth corpus under src/teddy/data/corpus.

Normal files are assembled from idiom-free helper functions.  Each Py/NPy
idiom type gets two host files: one embeds the catalog original verbatim,
the other a lightly mutated copy (renamed identifiers, other literals).

    python scripts/build_corpus.py
"""

from __future__ import annotations

import json
import textwrap
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
CATALOG = ROOT / "src" / "teddy" / "data" / "catalog"
OUT = ROOT / "src" / "teddy" / "data" / "corpus"

HEADER = "import collections\nimport itertools\nimport math\nimport os\n"

FRAGMENTS = [
    """
    def fibonacci(limit):
        if limit < 2:
            return limit
        return fibonacci(limit - 1) + fibonacci(limit - 2)
    """,
    """
    class Stack:
        def __init__(self):
            self._data = collections.deque()

        def push(self, element):
            self._data.append(element)

        def pop(self):
            return self._data.pop()
    """,
    """
    def lcm(left, right):
        return abs(left * right) // math.gcd(left, right)
    """,
    """
    def clamp(value, lower, upper):
        return max(lower, min(value, upper))
    """,
    """
    def parse_version(text):
        parts = text.strip().split(".")
        return tuple(int(part) for part in parts)
    """,
    """
    def is_palindrome(word):
        cleaned = word.lower().replace(" ", "")
        return cleaned == cleaned[::-1]
    """,
    """
    def celsius_to_fahrenheit(celsius):
        return celsius * 9 / 5 + 32
    """,
    """
    def factorial(number):
        result = 1
        while number > 1:
            result *= number
            number -= 1
        return result
    """,
    """
    def binary_search(sorted_values, target):
        low = 0
        high = len(sorted_values) - 1
        while low <= high:
            middle = (low + high) // 2
            if sorted_values[middle] < target:
                low = middle + 1
            elif sorted_values[middle] > target:
                high = middle - 1
            else:
                return middle
        return -1
    """,
    """
    class Counter:
        def __init__(self, start=0):
            self.count = start

        def increment(self, step=1):
            self.count += step
            return self.count
    """,
    """
    def average(numbers):
        if not numbers:
            raise ValueError("empty input")
        return sum(numbers) / len(numbers)
    """,
    """
    def flatten_once(nested):
        return list(itertools.chain.from_iterable(nested))
    """,
    """
    def retry(func, attempts=3):
        last_error = None
        while attempts > 0:
            try:
                return func()
            except OSError as error:
                last_error = error
                attempts -= 1
        raise last_error
    """,
    """
    def normalize_path(path):
        expanded = os.path.expanduser(path)
        return os.path.abspath(expanded)
    """,
    """
    def word_count(text):
        return len(text.split())
    """,
    """
    class Temperature:
        def __init__(self, kelvin):
            self.kelvin = kelvin

        @property
        def celsius(self):
            return self.kelvin - 273.15
    """,
    """
    def power_set_size(elements):
        return 2 ** len(elements)
    """,
    """
    def safe_divide(numerator, denominator, default=0.0):
        try:
            return numerator / denominator
        except ZeroDivisionError:
            return default
    """,
    """
    def chunk_count(length, size):
        return (length + size - 1) // size
    """,
    """
    def hypotenuse(side, other_side):
        return math.sqrt(side ** 2 + other_side ** 2)
    """,
]

# (NPy mutated copy, Py mutated copy): one renamed identifier or changed literal each
MUTATED = {
    "dictcomp": ("table = {}\nfor number in numbers:\n    table[number] = number * number\n",
                 "table = {number: number * number for number in numbers}\n"),
    "enumerate": ("for index in range(len(records)):\n    print(index, records[index])\n",
                  "for index, item in enumerate(records):\n    print(index, item)\n"),
    "fileread": ("file = open(\"settings.ini\")\ncontent = file.read()\nfile.close()\n",
                 "with open(\"settings.ini\") as file:\n    content = file.read()\n"),
    "listcomp": ("picked = []\nfor value in values:\n    if value % 2 == 0:\n        picked.append(value)\n",
                 "picked = [value for value in values if value % 2 == 0]\n"),
    "ifstmt": ("if color == \"red\" or color == \"green\" or color == \"black\":\n    print(color)\n",
               "if color in (\"red\", \"green\", \"black\"):\n    print(color)\n"),
    "strformat": ("message = \"Hello \" + name + \", you are \" + str(years) + \" years old\"\n",
                  "message = \"Hello {}, you are {} years old\".format(name, years)\n"),
    "set": ("unique_names = []\nfor name in people:\n    if name not in unique_names:\n        unique_names.append(name)\n",
            "unique_names = set(people)\n"),
    "tuple": ("coords = get_point()\nx = coords[0]\ny = coords[1]\n",
              "x, y = get_point()  # unpack\n"),
    "swap": ("hold = a\na = b\nb = hold\n",
             "a, b = b, a  # swap\n"),
    "format": ("x = 1; y = 2; z = 4\n",
               "x = 1\ny = 2\nz = 4\n"),
}


def fragment(i: int) -> str:
    return textwrap.dedent(FRAGMENTS[i % len(FRAGMENTS)]).strip("\n") + "\n"


def host(snippet: str, before: int, after: int, name: str) -> str:
    body = textwrap.indent(snippet, "    ")
    task = f"def {name}(data):\n{body}    return data\n"
    return "\n\n".join([HEADER, fragment(before), task, fragment(after)])


def normal(k: int) -> str:
    picks = [k % 20, (k * 7 + 3) % 20, (k * 11 + 5) % 20]
    seen: list[int] = []
    for p in picks:
        while p in seen:
            p = (p + 1) % 20
        seen.append(p)
    return "\n\n".join([HEADER, *(fragment(p) for p in seen)])


def main() -> None:
    manifest = json.loads((CATALOG / "catalog.json").read_text())
    originals = {
        (e["id"].rsplit("-", 2)[0], e["label"]): (CATALOG / e["snippet_file"]).read_text()
        for e in manifest
        if e["provenance"] == "original"
    }
    types = {e["id"].rsplit("-", 2)[0]: e["idiom_type"] for e in manifest}

    corpus = []
    for k in range(30):
        item_id = f"normal/normal_{k:02d}.py"
        corpus.append((item_id, "Normal", normal(k)))

    relevant: dict[tuple[str, str], list[str]] = {}
    for t, prefix in enumerate(MUTATED):
        for label, mutated in (("NPy", MUTATED[prefix][0]), ("Py", MUTATED[prefix][1])):
            group_dir = label.lower()
            verbatim = originals[(prefix, label)]
            for variant, snippet in (("a", verbatim), ("b", mutated)):
                item_id = f"{group_dir}/{prefix}_{variant}.py"
                seed = t * 2 + (variant == "b") + (label == "Py") * 5
                text = host(snippet, seed, seed + 9, f"run_{prefix}")
                corpus.append((item_id, label, text))
                relevant.setdefault((prefix, label), []).append(item_id)

    for item_id, _, text in corpus:
        path = OUT / item_id
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)

    relevance = {
        e["id"]: relevant[(e["id"].rsplit("-", 2)[0], e["label"])] for e in manifest
    }
    truth = {
        "corpus": [{"id": item_id, "path": item_id, "group": group} for item_id, group, _ in corpus],
        "relevance": relevance,
    }
    (OUT / "truth.json").write_text(json.dumps(truth, indent=2) + "\n")
    assert len(types) == 10
    print(f"wrote {len(corpus)} files to {OUT}")


if __name__ == "__main__":
    main()
