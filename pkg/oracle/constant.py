"""厳密解ソルバの上限値の設定。
"""

# 全探索で扱う配列数の上限
ORACLE_MAX_SEQUENCES = 4

# 全探索で扱う配列長の上限
ORACLE_MAX_LENGTH = 12

# 言語サイズを数え上げる文字列長の上限
ORACLE_MAX_LANGUAGE_LENGTH = 12
