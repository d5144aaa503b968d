"""Reference values of S(d, 5) for d = 1..8, used as golden data."""

KNOWN_S_N5: dict[int, tuple[tuple[int, ...], ...]] = {
    1: (
        (1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1),
    ),
    2: (
        (26, 22, 18, 14, 10),
        (22, 20, 18, 16, 14),
        (18, 18, 18, 18, 18),
        (14, 16, 18, 20, 22),
        (10, 14, 18, 22, 26),
    ),
    3: (
        (251, 193, 141, 95, 55),
        (193, 173, 150, 124, 95),
        (141, 150, 153, 150, 141),
        (95, 124, 150, 173, 193),
        (55, 95, 141, 193, 251),
    ),
    4: (
        (1476, 1064, 720, 440, 220),
        (1064, 960, 816, 640, 440),
        (720, 816, 848, 816, 720),
        (440, 640, 816, 960, 1064),
        (220, 440, 720, 1064, 1476),
    ),
    5: (
        (6376, 4385, 2805, 1595, 715),
        (4385, 4006, 3360, 2530, 1595),
        (2805, 3360, 3546, 3360, 2805),
        (1595, 2530, 3360, 4006, 4385),
        (715, 1595, 2805, 4385, 6376),
    ),
    6: (
        (22252, 14762, 9042, 4862, 2002),
        (14762, 13672, 11352, 8272, 4862),
        (9042, 11352, 12132, 11352, 9042),
        (4862, 8272, 11352, 13672, 14762),
        (2002, 4862, 9042, 14762, 22252),
    ),
    7: (
        (66352, 42779, 25311, 13013, 5005),
        (42779, 40150, 33066, 23452, 13013),
        (25311, 33066, 35706, 33066, 25311),
        (13013, 23452, 33066, 40150, 42779),
        (5005, 13013, 25311, 42779, 66352),
    ),
    8: (
        (175252, 110396, 63492, 31460, 11440),
        (110396, 104896, 85800, 59488, 31460),
        (63492, 85800, 93456, 85800, 63492),
        (31460, 59488, 85800, 104896, 110396),
        (11440, 31460, 63492, 110396, 175252),
    ),
}
