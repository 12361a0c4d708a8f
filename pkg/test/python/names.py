# Copyright (c) 2026 The citefit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You may obtain a copy of the License at
#     https://www.gnu.org/licenses/gpl-3.0.txt

import json, os, tempfile, unittest

from citefit.corpus import normalize_name, normalize_names, load_name_overrides
from citefit.errors import ConfigurationError

class test_names(unittest.TestCase):

    def test_normalize(self):
        for raw, expected in [("Shneiderman, B.", "b shneiderman"),
                              ("B. Shneiderman", "b shneiderman"),
                              ("  Ben   SHNEIDERMAN ", "ben shneiderman"),
                              ("Müller, Jörg", "jorg muller"),
                              ("van Wijk, Jarke J.", "jarke j van wijk"),
                              ("O'Brien", "o brien")]:
            self.assertEqual(normalize_name(raw), expected)

    def test_idempotent(self):
        for raw in ["Card, Stuart K.", "Zoë Ünal-Smith", "J.-D. Fekete", "x"]:
            once = normalize_name(raw)
            self.assertEqual(normalize_name(once), once)

    def test_normalize_names(self):
        m = normalize_names(["Card, Stuart K.", "Stuart K. Card", "Rao, Ramana", "Card, Stuart K."])
        self.assertEqual(list(m), ["Card, Stuart K.", "Stuart K. Card", "Rao, Ramana"])
        self.assertEqual(set(m.values()), {"stuart k card", "ramana rao"})

    def test_overrides(self):
        raw = ["Card, S.", "Stuart K. Card", "Rao, Ramana"]
        m = normalize_names(raw, {"Card, S.": "stuart k card"})
        self.assertEqual(m["Card, S."], "stuart k card")
        self.assertEqual(m["Stuart K. Card"], "stuart k card")
        # matched through the normalized form
        m = normalize_names(raw, [("s card", "stuart k card")])
        self.assertEqual(m["Card, S."], "stuart k card")
        self.assertEqual(m["Rao, Ramana"], "ramana rao")

    def test_conflicting_overrides(self):
        with self.assertRaises(ConfigurationError):
            normalize_names(["Card, S."], [("Card, S.", "stuart card"), ("S. Card", "sam card")])
        # the same mapping twice is not a conflict
        m = normalize_names(["Card, S."], [("Card, S.", "stuart card"), ("S. Card", "stuart card")])
        self.assertEqual(m["Card, S."], "stuart card")

    def test_load_overrides(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'names.csv')
            with open(path, 'w') as f:
                f.write("raw,canonical\n# a comment\nCard S.,stuart k card\n\"Rao, R.\",ramana rao\n")
            self.assertEqual(load_name_overrides(path), [("Card S.", "stuart k card"), ("Rao, R.", "ramana rao")])

            path = os.path.join(d, 'names.json')
            with open(path, 'w') as f:
                f.write('{"Card S.": "stuart k card", "Card S.": "sam card"}')
            pairs = load_name_overrides(path)
            self.assertEqual(pairs, [("Card S.", "stuart k card"), ("Card S.", "sam card")])
            with self.assertRaises(ConfigurationError):
                normalize_names(["Card S."], pairs)

            with open(path, 'w') as f:
                f.write('{"Card S.": ')
            with self.assertRaises(ConfigurationError):
                load_name_overrides(path)

            path = os.path.join(d, 'bad.csv')
            with open(path, 'w') as f:
                f.write("a,b,c\n")
            with self.assertRaises(ConfigurationError):
                load_name_overrides(path)

if __name__ == '__main__':
    unittest.main()
