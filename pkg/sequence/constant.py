"""配列とパターンの定数。
"""

# ワイルドカードを表す文字
WILDCARD = "*"

# DNA配列のアルファベット
DNA_SYMBOLS = "ACGT"

# タンパク質配列のアルファベット(20種類のアミノ酸)
PROTEIN_SYMBOLS = "ACDEFGHIKLMNPQRSTVWY"

# アルファベットのプリセット
ALPHABET_PRESETS = {
    "dna": DNA_SYMBOLS,
    "protein": PROTEIN_SYMBOLS,
}
