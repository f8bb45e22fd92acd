from pysemiext.zoo import (
    BUILTINS,
    MONOID_ZOO,
    ZOO,
    builtin,
    format_cayley,
    load_cayley,
    parse_cayley,
    resolve,
)
from pysemiext.semigroup import regularity
from pysemiext.errors import MalformedTable, NonAssociative, ParseError

import os
import tempfile
import unittest

MIN2_TEXT = """
# two-element semilattice
2        # order
0 0
0 1
identity=1
zero=0
name 0 zero
name 1 one
"""


class TestCaseCayleyText(unittest.TestCase):
    def test_parse(self):
        S = parse_cayley(MIN2_TEXT)
        self.assertEqual(S.size, 2)
        self.assertEqual((S.identity, S.zero), (1, 0))
        self.assertEqual(S.names, ("zero", "one"))
        self.assertTrue(S.same_table(builtin("min2")))

    def test_format_parses_back(self):
        S = builtin("T2")
        again = parse_cayley(format_cayley(S))
        self.assertTrue(again.same_table(S))
        self.assertEqual(again.names, S.names)
        self.assertEqual(format_cayley(builtin("min2")), "2\n0 0\n0 1\nidentity=1\nzero=0\nname 0 0\nname 1 1\n")

    def test_parse_errors(self):
        cases = [
            ("", 0),
            ("# nothing\n", 0),
            ("two\n", 1),
            ("0\n", 1),
            ("2\n0 0\n", 2),
            ("2\n0 x\n0 1\n", 2),
            ("2\n0 0\n0 1\nunit=1\n", 4),
            ("2\n0 0\n0 1\nidentity=one\n", 4),
            ("2\n0 0\n0 1\nzero=0\nname 5 five\n", 5),
            ("2\n0 0\n0 1\nname -1 minus\n", 4),
        ]
        for text, line in cases:
            with self.assertRaises(ParseError, msg=repr(text)) as ctx:
                parse_cayley(text)
            self.assertEqual(ctx.exception.line_number, line, repr(text))

    def test_table_errors(self):
        with self.assertRaises(MalformedTable):
            parse_cayley("2\n0 0 0\n0 1\n")
        with self.assertRaises(NonAssociative):
            parse_cayley("2\n1 0\n0 0\n")

    def test_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "min2.txt")
            with open(path, "w") as f:
                f.write(MIN2_TEXT)
            self.assertTrue(load_cayley(path).same_table(builtin("min2")))
            self.assertTrue(resolve(path).same_table(builtin("min2")))
        with self.assertRaises(OSError):
            load_cayley(os.path.join(tempfile.gettempdir(), "no-such-table.txt"))


class TestCaseBuiltins(unittest.TestCase):
    def test_every_builtin_validates(self):
        for name in BUILTINS:
            S = builtin(name)
            self.assertGreaterEqual(S.size, 1, name)
        self.assertEqual(builtin("nonortho5").names, ("0", "(0,0)", "(0,1)", "(1,0)", "(1,1)"))
        self.assertEqual(builtin("B2").size, 5)

    def test_monoids(self):
        for name in MONOID_ZOO:
            self.assertIsNotNone(builtin(name).identity, name)
        for name in ("leftzero2", "null2", "nonortho5"):
            self.assertIsNone(builtin(name).identity, name)
        self.assertEqual(builtin("chain3").identity, 2)
        self.assertTrue(set(MONOID_ZOO) <= set(ZOO))

    def test_flag_failures_are_covered(self):
        self.assertFalse(regularity(builtin("null2"))["is_regular"])
        self.assertFalse(regularity(builtin("nonortho5"))["is_orthodox"])
        self.assertFalse(regularity(builtin("T2"))["is_inverse"])

    def test_resolve(self):
        self.assertTrue(resolve("builtin:chain3").same_table(builtin("chain3")))
        with self.assertRaises(ParseError):
            resolve("builtin:nope")
        with self.assertRaises(KeyError):
            builtin("nope")


if __name__ == "__main__":
    unittest.main()
