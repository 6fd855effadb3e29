"""Published weight data used as baselines and as reproduction targets.

Lists are transcribed as published; sets that are described by a rule
(evens minus exclusions) are built from that rule.
"""

from __future__ import annotations

from .apset import APSet

RM_2_6 = (0, 16, 24, 28, 32, 36, 40, 48, 64)
RM_2_7 = (0, 32, 48, 56, 64, 72, 80, 96, 128)

SUMSET_RM_2_6 = (
    0, 16, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64, 68, 72, 76, 80, 84, 88, 92,
    96, 100, 104, 112, 128,
)

SUMSET_RM_2_7 = (
    0, 32, 48, 56, 64, 72, 80, 88, 96, 104, 112, 120, 128, 136, 144, 152, 160,
    168, 176, 184, 192, 200, 208, 224, 256,
)

# RM(3,8) ∩ extended BCH(255,19), dimension 26
BCH_255_19_TABLE = (
    (0, 1), (80, 8), (88, 56), (92, 512), (96, 4939), (100, 30216),
    (104, 159164), (108, 615184), (112, 1851060), (116, 4389152),
    (120, 8126540), (124, 11733960), (128, 13287280), (132, 11733960),
    (136, 8126540), (140, 4389152), (144, 1851060), (148, 615184),
    (152, 159164), (156, 30216), (160, 4939), (164, 512), (168, 56),
    (176, 8), (256, 1),
)

# weights of RM(3,8) congruent to 4 mod 8 given by the OEIS A146953 distribution
RM_3_8_EXTRA_CITED = (100, 108, 116, 124, 132, 140, 148, 156, 164)

RM_3_8 = (
    0, 32, 48, 56, 64, 68, 72, 76, 80, 84, 88, 92, 96, 100, 104, 108, 112, 116,
    120, 124, 128, 132, 136, 140, 144, 148, 152, 156, 160, 164, 168, 172, 176, 180,
    184, 188, 192, 200, 208, 224, 256,
)

SUMSET_RM_3_8 = (
    0, 32, 48, 56, 64, 68, 72, 76, 80, 84, 88, 92, 96, 100, 104, 108, 112, 116,
    120, 124, 128, 132, 136, 140, 144, 148, 152, 156, 160, 164, 168, 172, 176, 180,
    184, 188, 192, 196, 200, 204, 208, 212, 216, 220, 224, 228, 232, 236, 240, 244,
    248, 252, 256, 260, 264, 268, 272, 276, 280, 284, 288, 292, 296, 300, 304, 308,
    312, 316, 320, 324, 328, 332, 336, 340, 344, 348, 352, 356, 360, 364, 368, 372,
    376, 380, 384, 388, 392, 396, 400, 404, 408, 412, 416, 420, 424, 428, 432, 436,
    440, 444, 448, 456, 464, 480, 512,
)

# RM(5,10): weights obtained by doubling the RM(4,9) spectrum
RM_5_10_SUMSET_PART = (
    0, 32, 48, 56, 60, 64, 68, 72, 76, 80, 84, 88, 92, 96, 100, 104, 108, 112,
    116, 120, 124, 128, 132, 136, 140, 144, 148, 152, 156, 160, 164, 168, 172, 176,
    180, 184, 188, 192, 196, 200, 204, 208, 212, 216, 220, 224, 228, 232, 236, 240,
    244, 248, 252, 256, 260, 264, 268, 272, 276, 280, 284, 288, 292, 296, 300, 304,
    308, 312, 316, 320, 324, 328, 332, 336, 340, 344, 348, 352, 356, 360, 364, 368,
    372, 376, 380, 384, 388, 392, 396, 400, 404, 408, 412, 416, 420, 424, 428, 432,
    436, 440, 444, 448, 452, 456, 460, 464, 468, 472, 476, 480, 484, 488, 492, 496,
    500, 504, 508, 512, 516, 520, 524, 528, 532, 536, 540, 544, 548, 552, 556, 560,
    564, 568, 572, 576, 580, 584, 588, 592, 596, 600, 604, 608, 612, 616, 620, 624,
    628, 632, 636, 640, 644, 648, 652, 656, 660, 664, 668, 672, 676, 680, 684, 688,
    692, 696, 700, 704, 708, 712, 716, 720, 724, 728, 732, 736, 740, 744, 748, 752,
    756, 760, 764, 768, 772, 776, 780, 784, 788, 792, 796, 800, 804, 808, 812, 816,
    820, 824, 828, 832, 836, 840, 844, 848, 852, 856, 860, 864, 868, 872, 876, 880,
    884, 888, 892, 896, 900, 904, 908, 912, 916, 920, 924, 928, 932, 936, 940, 944,
    948, 952, 956, 960, 964, 968, 976, 992, 1024,
)
RM_5_10_SPECIAL = (62, 962)
RM_5_10_BCH_RANGE = (448, 576)  # every even weight in this closed range


def rm_3_6() -> APSet:
    return APSet.interval(0, 64, 2) - APSet.from_values([2, 4, 6, 10, 54, 58, 60, 62])


def rm_4_8() -> APSet:
    return APSet.from_values([0, 16, 24]) | APSet.interval(28, 228, 2) | APSet.from_values(
        [232, 240, 256]
    )
