# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import io
import json
from typing import Any, Callable


class Out(io.StringIO):
    """
    Out is an in-memory output stream standing in for stdout or stderr
    of the fadel command; io_callback receives each write.
    """

    def __init__(self, io_callback: Callable[[str], Any] | None = None):
        super().__init__()
        self.__io_callback = io_callback

    def write(self, s: str) -> int:
        if self.__io_callback is not None:
            self.__io_callback(s)
        return super().write(s)

    def json(self) -> Any:
        """json decodes the written text as JSON document."""
        return json.loads(self.getvalue())


class In(io.StringIO):
    """In is an in-memory stdin holding given text, e.g. a ring table."""
