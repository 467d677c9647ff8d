"""ライブラリ全体で使用する例外クラス。
"""


class PalsError(Exception):
    """全ての例外の基底クラス。
    """


class InvalidInputError(PalsError, ValueError):
    """事前条件を満たさない入力を表す例外。
    """


class OracleLimitError(PalsError, RuntimeError):
    """厳密解の列挙が上限を超える入力を表す例外。
    """


class FastaFormatError(PalsError, ValueError):
    """FASTAファイルの読み込みエラー。
    """
    def __init__(self, message: str, line: int):
        """FastaFormatErrorクラスのコンストラクタ。

        Args:
            message (str): エラーメッセージ。
            line (int): エラーが発生した行番号(1始まり)。
        """
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyFastaError(FastaFormatError):
    """配列を1つも含まないFASTAファイル。
    """


class MalformedRecordError(FastaFormatError):
    """ヘッダ行の欠落など、レコードの形式が不正なFASTAファイル。
    """


class UnknownSymbolError(FastaFormatError):
    """指定したアルファベットに含まれない文字を含むFASTAファイル。
    """
