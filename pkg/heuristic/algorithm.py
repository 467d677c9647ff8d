"""ヒューリスティックの種類の定数と処理定義。
"""
from enum import Enum


class Algorithm(Enum):
    """LCS、SCSを求めるアルゴリズムを表すクラス。
    """
    DEPOSITION_EXTENSION = "depextn"
    ALPHABET = "alphabet"
    SUM_HEIGHT = "sh"
    MIN_HEIGHT = "mh"
    DEPOSITION_REDUCTION = "depredn"
    TRANSFORM = "transform"

    @classmethod
    def get_scs_choices(cls):
        """CLIで指定できるSCSアルゴリズムの名前を取得する。

        Returns:
            List[str]: アルゴリズム名のリスト。
        """
        return [cls.ALPHABET.value, cls.SUM_HEIGHT.value, cls.MIN_HEIGHT.value, \
            cls.DEPOSITION_REDUCTION.value]


class Base(Enum):
    """パターン生成の元にするヒューリスティック解の種類。
    """
    LCS = "lcs"
    SCS = "scs"

    @classmethod
    def get_choices(cls):
        """CLIで指定できる名前を取得する。

        Returns:
            List[str]: 名前のリスト。
        """
        return [cls.LCS.value, cls.SCS.value]
