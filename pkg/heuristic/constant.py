"""ヒューリスティック探索のパラメータ設定
"""

# 探索範囲の初期値を決めるアルファベットサイズの倍率
WINDOW_FACTOR = 2

# 共通文字が見つからない時に探索範囲を倍にする回数の上限
MAX_WINDOW_GROWTH = 4

# SCSのテンプレートプールのサイズ
POOL_SIZE = 8

# パターン上でLCSを求める時の探索範囲
PATTERN_WINDOW = 2

# 出現位置が存在しないことを表す値
NOT_FOUND = -1
