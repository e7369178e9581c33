#!/usr/bin/env python3

import sys
import os
import threading
import unittest

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars, ensure_defaults
from utils.parallel_run import run_in_parallel, default_worker_count


class TestParallelRun(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def tearDown(self):
        config_vars.clear()

    def test_order_is_kept(self):
        items = list(range(40))
        self.assertEqual([i * i for i in items], run_in_parallel(lambda i: i * i, items, max_workers=4))

    def test_sequential(self):
        threads = set()

        def record(item):
            threads.add(threading.get_ident())
            return item

        self.assertEqual(["a", "b"], run_in_parallel(record, ["a", "b"], max_workers=1))
        self.assertEqual({threading.get_ident()}, threads)

    def test_empty(self):
        self.assertEqual([], run_in_parallel(str, []))

    def test_worker_count_cap(self):
        ensure_defaults()
        config_vars["MAX_PARALLEL_TRIALS"] = "1"
        self.assertEqual(1, default_worker_count())
        config_vars["MAX_PARALLEL_TRIALS"] = "4"
        self.assertLessEqual(default_worker_count(), 4)
        self.assertGreaterEqual(default_worker_count(), 1)

    def test_exceptions_propagate(self):
        def fail(item):
            raise RuntimeError(item)

        with self.assertRaises(RuntimeError):
            run_in_parallel(fail, [1, 2, 3], max_workers=2)


if __name__ == '__main__':
    unittest.main(verbosity=3)
