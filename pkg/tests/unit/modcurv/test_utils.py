# Copyright (c) 2023 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import unittest
from unittest.mock import patch

from modcurv import utils
from modcurv.errors import ConfigException


class UtilsTestCase(unittest.TestCase):
    def test_nonpositive_integer(self):
        self.assertTrue(utils.is_nonpositive_integer(0))
        self.assertTrue(utils.is_nonpositive_integer(-3.0))
        self.assertTrue(utils.is_nonpositive_integer(-2 + 1e-14))
        self.assertFalse(utils.is_nonpositive_integer(1.0))
        self.assertFalse(utils.is_nonpositive_integer(-2.5))
        self.assertFalse(utils.is_nonpositive_integer(-2 + 1e-6))

    def test_is_integer(self):
        self.assertTrue(utils.is_integer(4.0))
        self.assertFalse(utils.is_integer(4.5))

    def test_parse_float_list(self):
        self.assertEqual(utils.parse_float_list("3, 4,5.5"), [3.0, 4.0, 5.5])
        self.assertEqual(utils.parse_float_list("2,"), [2.0])

    def test_parse_float_list_malformed(self):
        with self.assertRaises(ConfigException):
            utils.parse_float_list("3,four")

    def test_parse_float_list_empty(self):
        with self.assertRaises(ConfigException):
            utils.parse_float_list(" , ")

    @patch.dict(os.environ, {"MODCURV_THREADS": "3"})
    def test_thread_count_env_wins(self):
        self.assertEqual(utils.get_thread_count(6), 3)

    @patch.dict(os.environ, {"MODCURV_THREADS": "zero"})
    def test_thread_count_env_malformed(self):
        with self.assertRaises(ConfigException):
            utils.get_thread_count()

    @patch.dict(os.environ, {"MODCURV_THREADS": "0"})
    def test_thread_count_env_nonpositive(self):
        with self.assertRaises(ConfigException):
            utils.get_thread_count()

    @patch.dict(os.environ, {}, clear=True)
    def test_thread_count_configured(self):
        self.assertEqual(utils.get_thread_count(5), 5)
        self.assertGreaterEqual(utils.get_thread_count(), 1)
        self.assertLessEqual(utils.get_thread_count(), 8)

    def test_parallel_map_keeps_order(self):
        items = list(range(50))
        self.assertEqual(
            utils.parallel_map(lambda x: x * x, items, threads=4),
            [x * x for x in items],
        )
        self.assertEqual(utils.parallel_map(str, [7], threads=4), ["7"])

    def test_singular_free_points(self):
        points = utils.singular_free_points([0.5, 1.0, 1.0005, 1.01], 1e-3)
        self.assertEqual(points, [0.5, 1.01])

    def test_singular_free_pairs(self):
        grid = [0.25, 0.5, 0.8, 1.25, 2.0, 4.0]
        pairs = utils.singular_free_pairs(grid, grid, 1e-3)
        # off-diagonal pairs less the reciprocal ones (0.25, 4), (0.5, 2),
        # (0.8, 1.25) and their transposes
        self.assertEqual(len(pairs), 24)
        self.assertNotIn((0.5, 2.0), pairs)
        self.assertNotIn((2.0, 2.0), pairs)
        self.assertIn((0.5, 4.0), pairs)


if __name__ == "__main__":
    unittest.main()
