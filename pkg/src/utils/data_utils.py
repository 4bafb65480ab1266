"""
Report output for verification runs.
"""
import os
import json
import pandas as pd
from typing import Dict, Any, List, Optional

from borcherds.ktheory import PAIRING_ORIENTATION


class ReportWriter:
    """Writes the report, the per-degree tables and the timings of one run"""

    def __init__(self, out_path: str):
        self.out_path = out_path

    @property
    def tables_path(self) -> str:
        return f"{self.out_path}.tables.csv"

    @property
    def timings_path(self) -> str:
        return f"{self.out_path}.timings.csv"

    @staticmethod
    def header(datum: Dict[str, Any], seed: int, pi_mode: str) -> Dict[str, Any]:
        """
        Header record of a report

        Parameters
        ----------
        datum : Dict[str, Any]
            JSON form of the superdatum
        seed : int
            Random seed of the run
        pi_mode : str
            generic, plus or minus

        Returns
        -------
        Dict[str, Any]
            The header object, written as the first report line
        """
        return {
            'datum': datum,
            'seed': seed,
            'pi_mode': pi_mode,
            'pairing_orientation': PAIRING_ORIENTATION,
        }

    @staticmethod
    def render(header: Dict[str, Any], records: List[Dict[str, Any]]) -> str:
        """
        Render the report text: the header line, then one line per check sorted by id

        Parameters
        ----------
        header : Dict[str, Any]
            Header record
        records : List[Dict[str, Any]]
            Check records with keys id, refs, inputs, verdict and witness

        Returns
        -------
        str
            The report, identical for identical inputs
        """
        lines = [json.dumps(header, sort_keys=True, ensure_ascii=False)]
        for record in sorted(records, key=lambda r: r['id']):
            lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
        return '\n'.join(lines) + '\n'

    def save_report(self, header: Dict[str, Any], records: List[Dict[str, Any]]) -> str:
        """
        Save the report to the output path

        Returns
        -------
        str
            Path to saved file
        """
        directory = os.path.dirname(self.out_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.out_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.render(header, records))
        return self.out_path

    def save_tables(self, tables: Dict[str, List[Dict[str, Any]]]) -> Optional[str]:
        """
        Save the per-degree tables of all checks to one CSV file

        Parameters
        ----------
        tables : Dict[str, List[Dict[str, Any]]]
            Table rows keyed by check id

        Returns
        -------
        Optional[str]
            Path to saved file, None when no check produced a table
        """
        frames = [
            pd.DataFrame(rows).assign(check_id=check_id)
            for check_id, rows in sorted(tables.items())
            if rows
        ]
        if not frames:
            return None
        data = pd.concat(frames, ignore_index=True)
        columns = ['check_id'] + [c for c in data.columns if c != 'check_id']
        data[columns].to_csv(self.tables_path, index=False)
        return self.tables_path

    def save_timings(self, timings: Dict[str, float]) -> str:
        """
        Save wall times in milliseconds, kept out of the report itself

        Parameters
        ----------
        timings : Dict[str, float]
            Milliseconds keyed by check id

        Returns
        -------
        str
            Path to saved file
        """
        data = pd.DataFrame(
            sorted(timings.items()),
            columns=['check_id', 'millis'],
        )
        data.to_csv(self.timings_path, index=False)
        return self.timings_path
