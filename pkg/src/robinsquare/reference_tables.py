"""Frozen reference rows of the endpoint eigenvalue tables of the square.

Classical Neumann (h = 0) and Dirichlet (h = inf) eigenvalues m^2 + n^2 of
the side-pi square, every row whose 1-based index range starts at or below
k = 129.  Rows are (m, n, value, k_min, k_max); tied eigenvalues share the
full index range.  The verification suite checks the table generator
against these rows exactly.
"""

NEUMANN_ROWS = [
    (0, 0, 0, 1, 1), (1, 0, 1, 2, 3), (0, 1, 1, 2, 3), (1, 1, 2, 4, 4),
    (2, 0, 4, 5, 6), (0, 2, 4, 5, 6), (2, 1, 5, 7, 8), (1, 2, 5, 7, 8),
    (2, 2, 8, 9, 9), (3, 0, 9, 10, 11), (0, 3, 9, 10, 11),
    (3, 1, 10, 12, 13), (1, 3, 10, 12, 13), (3, 2, 13, 14, 15),
    (2, 3, 13, 14, 15), (4, 0, 16, 16, 17), (0, 4, 16, 16, 17),
    (4, 1, 17, 18, 19), (1, 4, 17, 18, 19), (3, 3, 18, 20, 20),
    (4, 2, 20, 21, 22), (2, 4, 20, 21, 22), (5, 0, 25, 23, 26),
    (0, 5, 25, 23, 26), (4, 3, 25, 23, 26), (3, 4, 25, 23, 26),
    (5, 1, 26, 27, 28), (1, 5, 26, 27, 28), (5, 2, 29, 29, 30),
    (2, 5, 29, 29, 30), (4, 4, 32, 31, 31), (5, 3, 34, 32, 33),
    (3, 5, 34, 32, 33), (6, 0, 36, 34, 35), (0, 6, 36, 34, 35),
    (6, 1, 37, 36, 37), (1, 6, 37, 36, 37), (6, 2, 40, 38, 39),
    (2, 6, 40, 38, 39), (5, 4, 41, 40, 41), (4, 5, 41, 40, 41),
    (6, 3, 45, 42, 43), (3, 6, 45, 42, 43), (7, 0, 49, 44, 45),
    (0, 7, 49, 44, 45), (7, 1, 50, 46, 48), (5, 5, 50, 46, 48),
    (1, 7, 50, 46, 48), (6, 4, 52, 49, 50), (4, 6, 52, 49, 50),
    (7, 2, 53, 51, 52), (2, 7, 53, 51, 52), (7, 3, 58, 53, 54),
    (3, 7, 58, 53, 54), (6, 5, 61, 55, 56), (5, 6, 61, 55, 56),
    (8, 0, 64, 57, 58), (0, 8, 64, 57, 58), (8, 1, 65, 59, 62),
    (1, 8, 65, 59, 62), (7, 4, 65, 59, 62), (4, 7, 65, 59, 62),
    (8, 2, 68, 63, 64), (2, 8, 68, 63, 64), (6, 6, 72, 65, 65),
    (8, 3, 73, 66, 67), (3, 8, 73, 66, 67), (7, 5, 74, 68, 69),
    (5, 7, 74, 68, 69), (8, 4, 80, 70, 71), (4, 8, 80, 70, 71),
    (9, 0, 81, 72, 73), (0, 9, 81, 72, 73), (9, 1, 82, 74, 75),
    (1, 9, 82, 74, 75), (9, 2, 85, 76, 79), (2, 9, 85, 76, 79),
    (7, 6, 85, 76, 79), (6, 7, 85, 76, 79), (8, 5, 89, 80, 81),
    (5, 8, 89, 80, 81), (9, 3, 90, 82, 83), (3, 9, 90, 82, 83),
    (9, 4, 97, 84, 85), (4, 9, 97, 84, 85), (7, 7, 98, 86, 86),
    (10, 0, 100, 87, 90), (0, 10, 100, 87, 90), (8, 6, 100, 87, 90),
    (6, 8, 100, 87, 90), (10, 1, 101, 91, 92), (1, 10, 101, 91, 92),
    (10, 2, 104, 93, 94), (2, 10, 104, 93, 94), (9, 5, 106, 95, 96),
    (5, 9, 106, 95, 96), (10, 3, 109, 97, 98), (3, 10, 109, 97, 98),
    (8, 7, 113, 99, 100), (7, 8, 113, 99, 100), (10, 4, 116, 101, 102),
    (4, 10, 116, 101, 102), (9, 6, 117, 103, 104), (6, 9, 117, 103, 104),
    (11, 0, 121, 105, 106), (0, 11, 121, 105, 106), (11, 1, 122, 107, 108),
    (1, 11, 122, 107, 108), (11, 2, 125, 109, 112), (2, 11, 125, 109, 112),
    (10, 5, 125, 109, 112), (5, 10, 125, 109, 112), (8, 8, 128, 113, 113),
    (11, 3, 130, 114, 117), (3, 11, 130, 114, 117), (9, 7, 130, 114, 117),
    (7, 9, 130, 114, 117), (10, 6, 136, 118, 119), (6, 10, 136, 118, 119),
    (11, 4, 137, 120, 121), (4, 11, 137, 120, 121), (12, 0, 144, 122, 123),
    (0, 12, 144, 122, 123), (12, 1, 145, 124, 127), (9, 8, 145, 124, 127),
    (8, 9, 145, 124, 127), (1, 12, 145, 124, 127), (11, 5, 146, 128, 129),
    (5, 11, 146, 128, 129),
]

DIRICHLET_ROWS = [
    (1, 1, 2, 1, 1), (2, 1, 5, 2, 3), (1, 2, 5, 2, 3), (2, 2, 8, 4, 4),
    (3, 1, 10, 5, 6), (1, 3, 10, 5, 6), (3, 2, 13, 7, 8), (2, 3, 13, 7, 8),
    (4, 1, 17, 9, 10), (1, 4, 17, 9, 10), (3, 3, 18, 11, 11),
    (4, 2, 20, 12, 13), (2, 4, 20, 12, 13), (4, 3, 25, 14, 15),
    (3, 4, 25, 14, 15), (5, 1, 26, 16, 17), (1, 5, 26, 16, 17),
    (5, 2, 29, 18, 19), (2, 5, 29, 18, 19), (4, 4, 32, 20, 20),
    (5, 3, 34, 21, 22), (3, 5, 34, 21, 22), (6, 1, 37, 23, 24),
    (1, 6, 37, 23, 24), (6, 2, 40, 25, 26), (2, 6, 40, 25, 26),
    (5, 4, 41, 27, 28), (4, 5, 41, 27, 28), (6, 3, 45, 29, 30),
    (3, 6, 45, 29, 30), (5, 5, 50, 31, 33), (7, 1, 50, 31, 33),
    (1, 7, 50, 31, 33), (6, 4, 52, 34, 35), (4, 6, 52, 34, 35),
    (7, 2, 53, 36, 37), (2, 7, 53, 36, 37), (7, 3, 58, 38, 39),
    (3, 7, 58, 38, 39), (6, 5, 61, 40, 41), (5, 6, 61, 40, 41),
    (8, 1, 65, 42, 45), (7, 4, 65, 42, 45), (4, 7, 65, 42, 45),
    (1, 8, 65, 42, 45), (8, 2, 68, 46, 47), (2, 8, 68, 46, 47),
    (6, 6, 72, 48, 48), (8, 3, 73, 49, 50), (3, 8, 73, 49, 50),
    (7, 5, 74, 51, 52), (5, 7, 74, 51, 52), (8, 4, 80, 53, 54),
    (4, 8, 80, 53, 54), (9, 1, 82, 55, 56), (1, 9, 82, 55, 56),
    (7, 6, 85, 57, 60), (6, 7, 85, 57, 60), (9, 2, 85, 57, 60),
    (2, 9, 85, 57, 60), (8, 5, 89, 61, 62), (5, 8, 89, 61, 62),
    (9, 3, 90, 63, 64), (3, 9, 90, 63, 64), (9, 4, 97, 65, 66),
    (4, 9, 97, 65, 66), (7, 7, 98, 67, 67), (8, 6, 100, 68, 69),
    (6, 8, 100, 68, 69), (10, 1, 101, 70, 71), (1, 10, 101, 70, 71),
    (10, 2, 104, 72, 73), (2, 10, 104, 72, 73), (9, 5, 106, 74, 75),
    (5, 9, 106, 74, 75), (10, 3, 109, 76, 77), (3, 10, 109, 76, 77),
    (8, 7, 113, 78, 79), (7, 8, 113, 78, 79), (10, 4, 116, 80, 81),
    (4, 10, 116, 80, 81), (9, 6, 117, 82, 83), (6, 9, 117, 82, 83),
    (11, 1, 122, 84, 85), (1, 11, 122, 84, 85), (10, 5, 125, 86, 89),
    (5, 10, 125, 86, 89), (11, 2, 125, 86, 89), (2, 11, 125, 86, 89),
    (8, 8, 128, 90, 90), (9, 7, 130, 91, 94), (7, 9, 130, 91, 94),
    (11, 3, 130, 91, 94), (3, 11, 130, 91, 94), (10, 6, 136, 95, 96),
    (6, 10, 136, 95, 96), (11, 4, 137, 97, 98), (4, 11, 137, 97, 98),
    (9, 8, 145, 99, 102), (8, 9, 145, 99, 102), (12, 1, 145, 99, 102),
    (1, 12, 145, 99, 102), (11, 5, 146, 103, 104), (5, 11, 146, 103, 104),
    (12, 2, 148, 105, 106), (2, 12, 148, 105, 106), (10, 7, 149, 107, 108),
    (7, 10, 149, 107, 108), (12, 3, 153, 109, 110), (3, 12, 153, 109, 110),
    (11, 6, 157, 111, 112), (6, 11, 157, 111, 112), (12, 4, 160, 113, 114),
    (4, 12, 160, 113, 114), (9, 9, 162, 115, 115), (10, 8, 164, 116, 117),
    (8, 10, 164, 116, 117), (12, 5, 169, 118, 119), (5, 12, 169, 118, 119),
    (11, 7, 170, 120, 123), (7, 11, 170, 120, 123), (13, 1, 170, 120, 123),
    (1, 13, 170, 120, 123), (13, 2, 173, 124, 125), (2, 13, 173, 124, 125),
    (13, 3, 178, 126, 127), (3, 13, 178, 126, 127), (12, 6, 180, 128, 129),
    (6, 12, 180, 128, 129),
]
