#!/usr/bin/python

import pytest


pytest.main()