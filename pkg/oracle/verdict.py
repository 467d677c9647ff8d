"""検査結果の定数。
"""
from enum import Enum

class CheckVerdict(Enum):
    """検査の判定を表すクラス。
    """
    PASS = 0
    FAIL = 1
    SKIP = 2

    @classmethod
    def get_string(cls, verdict):
        """判定を表す文字列を取得する。

        Args:
            verdict (CheckVerdict): 判定。

        Returns:
            str: 判定の文字列。
        """
        if verdict == CheckVerdict.PASS:
            return "PASS"

        if verdict == CheckVerdict.FAIL:
            return "FAIL"

        if verdict == CheckVerdict.SKIP:
            return "SKIP"

        return "Undefined"

    @classmethod
    def from_violations(cls, checked: int, violations: int):
        """検査した件数と違反件数から判定を決める。

        Args:
            checked (int): 検査した件数。
            violations (int): 違反件数。

        Returns:
            CheckVerdict: 判定。
        """
        if checked == 0:
            return CheckVerdict.SKIP
        return CheckVerdict.FAIL if violations > 0 else CheckVerdict.PASS
