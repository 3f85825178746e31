# -*- coding: utf-8 -*-
from modules.workbench.config import BudgetConfig, OutputPaths, RunConfig
from modules.workbench.handlers import HANDLERS, Handler, Job, handler
from modules.workbench.verifiers import verify_record
from modules.workbench.run import RunResult, execute, exit_code_for, run
