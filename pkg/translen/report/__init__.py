from translen.report.sweep import SweepRow, rows_to_csv, run_sweep, sweep_row, write_csv

__all__ = ["SweepRow", "rows_to_csv", "run_sweep", "sweep_row", "write_csv"]
