# -*- coding: utf-8 -*-
from modules.reports.records import (
    SCHEMA_VERSION, Provenance, ResultRecord, canonical, make_record, normalize, problem_key, sha256
)
from modules.reports.tables import Table
from modules.reports.plots import PlotKind, emit_plot, render
