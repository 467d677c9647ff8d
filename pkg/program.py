"""プログラムの情報。
"""
PROGRAM_NAME="Pals"

# Version 0.1.0 : 部分列・超配列の判定、ワイルドカードパターンの照合処理の実装。
#                 厳密解ソルバ(2配列のDP、小規模入力の全探索)の実装。
# Version 0.2.0 : Deposition and ExtensionによるLCSヒューリスティックの実装。
#                 Alphabet, Sum Height, Min Height, Deposition and ReductionによるSCSヒューリスティックの実装。
# Version 0.3.0 : PALS-LCS, PALS-SCSの実装。接尾辞オートマトンによる最長共通部分文字列の列挙。
# Version 0.4.0 : PALS*の後処理(ワイルドカード削除、入れ替え、PDによる改善)の実装。
# Version 0.4.1 : pals_scsでパターンが全配列にマッチしないことがあるバグの修正。
# Version 0.5.0 : パターンを介したLCSとSCSの相互変換、反復改善の実装。
# Version 0.6.0 : FASTAの読み書き、データセット生成、JSON/TSVレポート、evalコマンドのサポート。
# Version 0.6.1 : --timingsオプションの追加。既知のコンセンサスとの比較(compareコマンド)の追加。
# Version 0.7.0 : benchコマンドのサポート。
VERSION="0.7.0"
