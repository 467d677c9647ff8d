"""パターン探索の各種パラメータの設定。
"""

# 乱数シードのデフォルト値。0の場合は同点の記号をアルファベット順で選ぶ
DEFAULT_SEED = 0

# 乱数シードを指定する環境変数名
SEED_ENV_VAR = "PALS_SEED"

# PALS*の感度の下限のデフォルト値
MIN_SENSITIVITY = 1.0

# pd_refineの最大反復回数
STAR_MAX_ROUNDS = 20

# 反復改善の最大ラウンド数
REFINE_ROUNDS = 10

# 反復改善で使用するヒューリスティック解の候補数
REFINE_CANDIDATES = 3

# データセット生成時の配列数
GEN_SEQUENCES = 10

# データセット生成時の配列長
GEN_LENGTH = 100

# データセット生成時のデータセット数
GEN_REPLICATES = 1

# ベンチマークで扱う配列数の上限
BENCH_MAX_SEQUENCES = 200

# ベンチマークで扱う配列長の上限
BENCH_MAX_LENGTH = 1000

# ベンチマーク実行ワーカ数
NUM_BENCH_WORKERS = 4

# evalコマンドで生成する検査インスタンス数
EVAL_INSTANCES = 200

# evalコマンドで生成する配列長の上限のデフォルト値
EVAL_MAX_LENGTH = 10

# FASTA出力時の1行あたりの文字数
FASTA_LINE_WIDTH = 60
