# This code is part of RQPhase.
#
# (C) Copyright 2024 RQPhase developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


from rich.console import Console
from rich.table import Table
from tabulate import tabulate

from rqphase.results.report_io import Report


def _display(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def draw_tabulate(report: Report, tablefmt: str = "fancy_grid") -> str:
    """Render a report as text; any tabulate format name works ("plain", "github", "grid", ...)."""
    table_data = [[_display(row.get(name)) for name in report.columns] for row in report.rows]
    return tabulate(table_data, headers=list(report.columns), tablefmt=tablefmt)


def draw_rich_table(report: Report, title: str = None, console: Console = None) -> Table:
    table = Table(title=title, show_header=True, header_style="bold")
    for name in report.columns:
        table.add_column(name, justify="left" if name in ("estimator", "target") else "right")
    for row in report.rows:
        table.add_row(*[_display(row.get(name)) for name in report.columns])
    if console is not None:
        console.print(table)
    return table
