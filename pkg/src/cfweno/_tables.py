"""Frozen exact-rational reconstruction tables.

Generated by cfweno.derive; do not edit by hand. Coefficient
polynomials are stored ascending in w = 1 - v as (num, den) integer
pairs, so evaluation at v = 1 reduces to reading the constant term
exactly. Regenerate with: python -m cfweno.derive --write
"""

TABLES = {'cfweno': {2: {'avg': [[[(0, 1), (-1, 1)], [(1, 1), (1, 1)], [(0, 1)]], [[(0, 1)], [(1, 1), (-1, 1)], [(0, 1), (1, 1)]], [[(0, 1), (-1, 1), (1, 1)], [(1, 1), (1, 1), (-2, 1)], [(0, 1), (0, 1), (1, 1)]]], 'foot': [[[(1, 1), (-2, 1)], [(0, 1), (2, 1)], [(0, 1)]], [[(0, 1)], [(2, 1), (-2, 1)], [(-1, 1), (2, 1)]], [[(1, 1), (-4, 1), (3, 1)], [(0, 1), (6, 1), (-6, 1)], [(0, 1), (-2, 1), (3, 1)]]], 'gamma_avg': [[(1, 1), (-1, 1)], [(0, 1), (1, 1)]], 'gamma_foot': [([(1, 1), (-4, 1), (3, 1)], [(1, 1), (-2, 1)]), ([(0, 1), (2, 1), (-3, 1)], [(1, 1), (-2, 1)])], 'poles': ['1/2'], 'beta': [[[(4, 1), (-4, 1), (0, 1)], [(-4, 1), (4, 1), (0, 1)], [(0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1)], [(0, 1), (4, 1), (-4, 1)], [(0, 1), (-4, 1), (4, 1)]]]}, 3: {'avg': [[[(0, 1), (0, 1), (1, 2)], [(0, 1), (-1, 1), (-1, 1)], [(1, 1), (1, 1), (1, 2)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1), (-1, 1), (1, 1)], [(1, 1), (1, 1), (-2, 1)], [(0, 1), (0, 1), (1, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(1, 1), (-3, 2), (1, 2)], [(0, 1), (2, 1), (-1, 1)], [(0, 1), (-1, 2), (1, 2)]], [[(0, 1), (0, 1), (1, 6), (-1, 4), (1, 12)], [(0, 1), (-1, 1), (1, 2), (1, 1), (-1, 2)], [(1, 1), (1, 1), (-19, 12), (-5, 4), (5, 6)], [(0, 1), (0, 1), (1, 1), (1, 2), (-1, 2)], [(0, 1), (0, 1), (-1, 12), (0, 1), (1, 12)]]], 'foot': [[[(0, 1), (-1, 1), (3, 2)], [(1, 1), (0, 1), (-3, 1)], [(0, 1), (1, 1), (3, 2)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(1, 1), (-4, 1), (3, 1)], [(0, 1), (6, 1), (-6, 1)], [(0, 1), (-2, 1), (3, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(5, 2), (-4, 1), (3, 2)], [(-2, 1), (6, 1), (-3, 1)], [(1, 2), (-2, 1), (3, 2)]], [[(0, 1), (-1, 3), (5, 4), (-4, 3), (5, 12)], [(1, 1), (-3, 1), (-3, 2), (6, 1), (-5, 2)], [(0, 1), (31, 6), (-1, 1), (-25, 3), (25, 6)], [(0, 1), (-2, 1), (3, 2), (4, 1), (-5, 2)], [(0, 1), (1, 6), (-1, 4), (-1, 3), (5, 12)]]], 'gamma_avg': [[(1, 3), (-1, 2), (1, 6)], [(2, 3), (1, 3), (-1, 3)], [(0, 1), (1, 6), (1, 6)]], 'gamma_foot': [([(4, 1), (-15, 1), (16, 1), (-5, 1)], [(12, 1), (-18, 1)]), ([(8, 1), (-31, 1), (1, 1), (60, 1), (-30, 1)], [(12, 1), (-54, 1), (54, 1)]), ([(0, 1), (2, 1), (-1, 1), (-5, 1)], [(6, 1), (-18, 1)])], 'poles': ['1/3', '2/3'], 'beta': [[[(10, 1), (-21, 1), (11, 1), (0, 1), (0, 1)], [(-21, 1), (48, 1), (-27, 1), (0, 1), (0, 1)], [(11, 1), (-27, 1), (16, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (40, 1), (-78, 1), (38, 1), (0, 1)], [(0, 1), (-78, 1), (156, 1), (-78, 1), (0, 1)], [(0, 1), (38, 1), (-78, 1), (40, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (16, 1), (-27, 1), (11, 1)], [(0, 1), (0, 1), (-27, 1), (48, 1), (-21, 1)], [(0, 1), (0, 1), (11, 1), (-21, 1), (10, 1)]]]}, 4: {'avg': [[[(0, 1), (0, 1), (-1, 2), (-1, 2)], [(0, 1), (0, 1), (7, 4), (5, 4)], [(0, 1), (-1, 1), (-2, 1), (-1, 1)], [(1, 1), (1, 1), (3, 4), (1, 4)], [(0, 1)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1), (0, 1), (1, 4), (-1, 4)], [(0, 1), (-1, 1), (0, 1), (1, 1)], [(1, 1), (1, 1), (-3, 4), (-5, 4)], [(0, 1), (0, 1), (1, 2), (1, 2)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1), (-1, 1), (3, 2), (-1, 2)], [(1, 1), (1, 1), (-13, 4), (5, 4)], [(0, 1), (0, 1), (2, 1), (-1, 1)], [(0, 1), (0, 1), (-1, 4), (1, 4)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1)], [(1, 1), (-2, 1), (5, 4), (-1, 4)], [(0, 1), (4, 1), (-4, 1), (1, 1)], [(0, 1), (-3, 1), (17, 4), (-5, 4)], [(0, 1), (1, 1), (-3, 2), (1, 2)]], [[(0, 1), (0, 1), (-1, 9), (1, 9), (1, 12), (-1, 9), (1, 36)], [(0, 1), (0, 1), (14, 27), (-17, 27), (-1, 6), (41, 108), (-11, 108)], [(0, 1), (-1, 1), (0, 1), (7, 4), (-1, 4), (-3, 4), (1, 4)], [(1, 1), (1, 1), (-133, 108), (-115, 54), (5, 6), (95, 108), (-19, 54)], [(0, 1), (0, 1), (1, 1), (1, 1), (-3, 4), (-1, 2), (1, 4)], [(0, 1), (0, 1), (-25, 108), (-7, 54), (1, 3), (7, 54), (-11, 108)], [(0, 1), (0, 1), (1, 18), (1, 36), (-1, 12), (-1, 36), (1, 36)]]], 'foot': [[[(0, 1), (1, 1), (0, 1), (-2, 1)], [(0, 1), (-7, 2), (3, 2), (5, 1)], [(1, 1), (2, 1), (-3, 1), (-4, 1)], [(0, 1), (1, 2), (3, 2), (1, 1)], [(0, 1)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1), (-1, 2), (3, 2), (-1, 1)], [(1, 1), (-2, 1), (-3, 1), (4, 1)], [(0, 1), (7, 2), (3, 2), (-5, 1)], [(0, 1), (-1, 1), (0, 1), (2, 1)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(1, 1), (-5, 1), (6, 1), (-2, 1)], [(0, 1), (17, 2), (-27, 2), (5, 1)], [(0, 1), (-4, 1), (9, 1), (-4, 1)], [(0, 1), (1, 2), (-3, 2), (1, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1)], [(3, 1), (-13, 2), (9, 2), (-1, 1)], [(-4, 1), (16, 1), (-15, 1), (4, 1)], [(3, 1), (-29, 2), (33, 2), (-5, 1)], [(-1, 1), (5, 1), (-6, 1), (2, 1)]], [[(0, 1), (2, 9), (-2, 3), (1, 9), (35, 36), (-5, 6), (7, 36)], [(0, 1), (-28, 27), (31, 9), (-50, 27), (-295, 108), (26, 9), (-77, 108)], [(1, 1), (-2, 1), (-21, 4), (8, 1), (5, 2), (-6, 1), (7, 4)], [(0, 1), (241, 54), (97, 36), (-320, 27), (-25, 108), (133, 18), (-133, 54)], [(0, 1), (-2, 1), (0, 1), (7, 1), (-5, 4), (-9, 2), (7, 4)], [(0, 1), (25, 54), (-11, 36), (-50, 27), (55, 54), (25, 18), (-77, 108)], [(0, 1), (-1, 9), (1, 12), (4, 9), (-5, 18), (-1, 3), (7, 36)]]], 'gamma_avg': [[(2, 9), (-4, 9), (5, 18), (-1, 18)], [(14, 27), (0, 1), (-7, 18), (7, 54)], [(7, 27), (7, 18), (0, 1), (-7, 54)], [(0, 1), (1, 18), (1, 9), (1, 18)]], 'gamma_foot': [([(-8, 1), (24, 1), (-4, 1), (-35, 1), (30, 1), (-7, 1)], [(-36, 1), (0, 1), (72, 1)]), ([(-56, 1), (112, 1), (220, 1), (-439, 1), (-80, 1), (313, 1), (-98, 1)], [(-108, 1), (216, 1), (216, 1), (-432, 1)]), ([(28, 1), (-108, 1), (-83, 1), (411, 1), (-15, 1), (-275, 1), (98, 1)], [(108, 1), (-648, 1), (1080, 1), (-432, 1)]), ([(0, 1), (4, 1), (1, 1), (-15, 1), (-5, 1), (7, 1)], [(36, 1), (-144, 1), (72, 1)])], 'poles': ['1 - sqrt(2)/2', '1/2', 'sqrt(2)/2'], 'beta': [[[(981, 5), (-1021, 2), (2172, 5), (-1201, 10), (0, 1), (0, 1), (0, 1)], [(-1021, 2), (5345, 4), (-1147, 1), (1285, 4), (0, 1), (0, 1), (0, 1)], [(2172, 5), (-1147, 1), (5004, 5), (-1441, 5), (0, 1), (0, 1), (0, 1)], [(-1201, 10), (1285, 4), (-1441, 5), (1741, 20), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (781, 20), (-781, 5), (781, 4), (-781, 10), (0, 1), (0, 1)], [(0, 1), (-781, 5), (3324, 5), (-859, 1), (1752, 5), (0, 1), (0, 1)], [(0, 1), (781, 4), (-859, 1), (4529, 4), (-937, 2), (0, 1), (0, 1)], [(0, 1), (-781, 10), (1752, 5), (-937, 2), (981, 5), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (981, 5), (-937, 2), (1752, 5), (-781, 10), (0, 1)], [(0, 1), (0, 1), (-937, 2), (4529, 4), (-859, 1), (781, 4), (0, 1)], [(0, 1), (0, 1), (1752, 5), (-859, 1), (3324, 5), (-781, 5), (0, 1)], [(0, 1), (0, 1), (-781, 10), (781, 4), (-781, 5), (781, 20), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (1741, 20), (-1441, 5), (1285, 4), (-1201, 10)], [(0, 1), (0, 1), (0, 1), (-1441, 5), (5004, 5), (-1147, 1), (2172, 5)], [(0, 1), (0, 1), (0, 1), (1285, 4), (-1147, 1), (5345, 4), (-1021, 2)], [(0, 1), (0, 1), (0, 1), (-1201, 10), (2172, 5), (-1021, 2), (981, 5)]]]}}, 'fweno': {2: {'avg': [[[(0, 1), (-1, 2)], [(1, 1), (1, 2)], [(0, 1)]], [[(0, 1)], [(1, 1), (-1, 2)], [(0, 1), (1, 2)]], [[(0, 1), (-1, 3), (1, 6)], [(1, 1), (1, 6), (-1, 3)], [(0, 1), (1, 6), (1, 6)]]], 'foot': [[[(1, 2), (-1, 1)], [(1, 2), (1, 1)], [(0, 1)]], [[(0, 1)], [(3, 2), (-1, 1)], [(-1, 2), (1, 1)]], [[(1, 3), (-1, 1), (1, 2)], [(5, 6), (1, 1), (-1, 1)], [(-1, 6), (0, 1), (1, 2)]]], 'gamma_avg': [[(2, 3), (-1, 3)], [(1, 3), (1, 3)]], 'gamma_foot': [([(2, 1), (-6, 1), (3, 1)], [(3, 1), (-6, 1)]), ([(1, 1), (0, 1), (-3, 1)], [(3, 1), (-6, 1)])], 'poles': ['1/2'], 'beta': [[[(1, 1), (-1, 1), (0, 1)], [(-1, 1), (1, 1), (0, 1)], [(0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (-1, 1)], [(0, 1), (-1, 1), (1, 1)]]]}, 3: {'avg': [[[(0, 1), (1, 6), (1, 6)], [(0, 1), (-5, 6), (-1, 3)], [(1, 1), (2, 3), (1, 6)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1), (-1, 3), (1, 6)], [(1, 1), (1, 6), (-1, 3)], [(0, 1), (1, 6), (1, 6)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(1, 1), (-5, 6), (1, 6)], [(0, 1), (7, 6), (-1, 3)], [(0, 1), (-1, 3), (1, 6)]], [[(0, 1), (1, 20), (1, 120), (-1, 30), (1, 120)], [(0, 1), (-9, 20), (7, 40), (11, 120), (-1, 30)], [(1, 1), (13, 60), (-49, 120), (-3, 40), (1, 20)], [(0, 1), (13, 60), (31, 120), (1, 120), (-1, 30)], [(0, 1), (-1, 30), (-1, 30), (1, 120), (1, 120)]]], 'foot': [[[(-1, 6), (0, 1), (1, 2)], [(5, 6), (-1, 1), (-1, 1)], [(1, 3), (1, 1), (1, 2)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(1, 3), (-1, 1), (1, 2)], [(5, 6), (1, 1), (-1, 1)], [(-1, 6), (0, 1), (1, 2)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(11, 6), (-2, 1), (1, 2)], [(-7, 6), (3, 1), (-1, 1)], [(1, 3), (-1, 1), (1, 2)]], [[(-1, 20), (1, 12), (1, 8), (-1, 6), (1, 24)], [(9, 20), (-5, 4), (1, 4), (1, 2), (-1, 6)], [(47, 60), (5, 4), (-1, 1), (-1, 2), (1, 4)], [(-13, 60), (-1, 12), (3, 4), (1, 6), (-1, 6)], [(1, 30), (0, 1), (-1, 8), (0, 1), (1, 24)]]], 'gamma_avg': [[(3, 10), (-1, 4), (1, 20)], [(3, 5), (1, 10), (-1, 10)], [(1, 10), (3, 20), (1, 20)]], 'gamma_foot': [([(-6, 1), (10, 1), (15, 1), (-20, 1), (5, 1)], [(-20, 1), (0, 1), (60, 1)]), ([(-24, 1), (64, 1), (81, 1), (-260, 1), (55, 1), (90, 1), (-30, 1)], [(-40, 1), (120, 1), (60, 1), (-360, 1), (180, 1)]), ([(4, 1), (0, 1), (-15, 1), (0, 1), (5, 1)], [(40, 1), (-120, 1), (60, 1)])], 'poles': ['1 - sqrt(3)/3', 'sqrt(3)/3'], 'beta': [[[(4, 3), (-19, 6), (11, 6), (0, 1), (0, 1)], [(-19, 6), (25, 3), (-31, 6), (0, 1), (0, 1)], [(11, 6), (-31, 6), (10, 3), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (4, 3), (-13, 6), (5, 6), (0, 1)], [(0, 1), (-13, 6), (13, 3), (-13, 6), (0, 1)], [(0, 1), (5, 6), (-13, 6), (4, 3), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (10, 3), (-31, 6), (11, 6)], [(0, 1), (0, 1), (-31, 6), (25, 3), (-19, 6)], [(0, 1), (0, 1), (11, 6), (-19, 6), (4, 3)]]]}, 4: {'avg': [[[(0, 1), (-1, 12), (-1, 8), (-1, 24)], [(0, 1), (5, 12), (13, 24), (1, 8)], [(0, 1), (-13, 12), (-17, 24), (-1, 8)], [(1, 1), (3, 4), (7, 24), (1, 24)], [(0, 1)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1), (1, 12), (1, 24), (-1, 24)], [(0, 1), (-7, 12), (1, 24), (1, 8)], [(1, 1), (5, 12), (-5, 24), (-1, 8)], [(0, 1), (1, 12), (1, 8), (1, 24)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1), (-1, 4), (5, 24), (-1, 24)], [(1, 1), (-1, 12), (-11, 24), (1, 8)], [(0, 1), (5, 12), (7, 24), (-1, 8)], [(0, 1), (-1, 12), (-1, 24), (1, 24)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1)], [(1, 1), (-13, 12), (3, 8), (-1, 24)], [(0, 1), (23, 12), (-23, 24), (1, 8)], [(0, 1), (-13, 12), (19, 24), (-1, 8)], [(0, 1), (1, 4), (-5, 24), (1, 24)]], [[(0, 1), (-1, 105), (-1, 252), (1, 140), (1, 5040), (-1, 840), (1, 5040)], [(0, 1), (19, 210), (53, 2520), (-67, 1008), (5, 504), (29, 5040), (-1, 840)], [(0, 1), (-107, 210), (431, 2520), (757, 5040), (-223, 5040), (-11, 1008), (1, 336)], [(1, 1), (101, 420), (-1109, 2520), (-38, 315), (31, 420), (5, 504), (-1, 252)], [(0, 1), (101, 420), (781, 2520), (23, 1260), (-293, 5040), (-1, 252), (1, 336)], [(0, 1), (-5, 84), (-41, 630), (71, 5040), (53, 2520), (1, 5040), (-1, 840)], [(0, 1), (1, 140), (1, 140), (-13, 5040), (-13, 5040), (1, 5040), (1, 5040)]]], 'foot': [[[(1, 12), (1, 12), (-1, 4), (-1, 6)], [(-5, 12), (-1, 4), (5, 4), (1, 2)], [(13, 12), (-3, 4), (-7, 4), (-1, 2)], [(1, 4), (11, 12), (3, 4), (1, 6)], [(0, 1)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(-1, 12), (1, 12), (1, 4), (-1, 6)], [(7, 12), (-5, 4), (-1, 4), (1, 2)], [(7, 12), (5, 4), (-1, 4), (-1, 2)], [(-1, 12), (-1, 12), (1, 4), (1, 6)], [(0, 1)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(1, 4), (-11, 12), (3, 4), (-1, 6)], [(13, 12), (3, 4), (-7, 4), (1, 2)], [(-5, 12), (1, 4), (5, 4), (-1, 2)], [(1, 12), (-1, 12), (-1, 4), (1, 6)], [(0, 1)]], [[(0, 1)], [(0, 1)], [(0, 1)], [(25, 12), (-35, 12), (5, 4), (-1, 6)], [(-23, 12), (23, 4), (-13, 4), (1, 2)], [(13, 12), (-15, 4), (11, 4), (-1, 2)], [(-1, 4), (11, 12), (-3, 4), (1, 6)]], [[(1, 105), (-1, 90), (-1, 30), (1, 36), (1, 144), (-1, 120), (1, 720)], [(-19, 210), (5, 36), (21, 80), (-11, 36), (1, 48), (1, 24), (-1, 120)], [(107, 210), (-49, 36), (1, 16), (7, 9), (-1, 6), (-1, 12), (1, 48)], [(319, 420), (49, 36), (-23, 24), (-7, 9), (23, 72), (1, 12), (-1, 36)], [(-101, 420), (-5, 36), (7, 8), (11, 36), (-13, 48), (-1, 24), (1, 48)], [(5, 84), (1, 90), (-19, 80), (-1, 36), (5, 48), (1, 120), (-1, 120)], [(-1, 140), (0, 1), (7, 240), (0, 1), (-1, 72), (0, 1), (1, 720)]]], 'gamma_avg': [[(4, 35), (-13, 105), (3, 70), (-1, 210)], [(18, 35), (-9, 70), (-2, 35), (1, 70)], [(12, 35), (1, 5), (-1, 70), (-1, 70)], [(1, 35), (11, 210), (1, 35), (1, 210)]], 'gamma_foot': [([(48, 1), (-56, 1), (-168, 1), (140, 1), (35, 1), (-42, 1), (7, 1)], [(420, 1), (420, 1), (-1260, 1), (-840, 1)]), ([(-216, 1), (108, 1), (1663, 1), (-657, 1), (-3353, 1), (1092, 1), (1477, 1), (-441, 1), (-147, 1), (42, 1)], [(-420, 1), (0, 1), (2940, 1), (0, 1), (-5460, 1), (0, 1), (1680, 1)]), ([(-432, 1), (1512, 1), (784, 1), (-6252, 1), (3829, 1), (2247, 1), (-2198, 1), (105, 1), (231, 1), (-42, 1)], [(-1260, 1), (5880, 1), (-4620, 1), (-11760, 1), (19740, 1), (-10080, 1), (1680, 1)]), ([(36, 1), (0, 1), (-147, 1), (0, 1), (70, 1), (0, 1), (-7, 1)], [(1260, 1), (-4620, 1), (3780, 1), (-840, 1)])], 'poles': ['3/2 - sqrt(5)/2', '1/2', '-1/2 + sqrt(5)/2'], 'beta': [[[(547, 240), (-647, 80), (2321, 240), (-309, 80), (0, 1), (0, 1), (0, 1)], [(-647, 80), (7043, 240), (-8623, 240), (3521, 240), (0, 1), (0, 1), (0, 1)], [(2321, 240), (-8623, 240), (11003, 240), (-1567, 80), (0, 1), (0, 1), (0, 1)], [(-309, 80), (3521, 240), (-1567, 80), (2107, 240), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (89, 80), (-821, 240), (267, 80), (-247, 240), (0, 1), (0, 1)], [(0, 1), (-821, 240), (2843, 240), (-2983, 240), (961, 240), (0, 1), (0, 1)], [(0, 1), (267, 80), (-2983, 240), (3443, 240), (-1261, 240), (0, 1), (0, 1)], [(0, 1), (-247, 240), (961, 240), (-1261, 240), (547, 240), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (547, 240), (-1261, 240), (961, 240), (-247, 240), (0, 1)], [(0, 1), (0, 1), (-1261, 240), (3443, 240), (-2983, 240), (267, 80), (0, 1)], [(0, 1), (0, 1), (961, 240), (-2983, 240), (2843, 240), (-821, 240), (0, 1)], [(0, 1), (0, 1), (-247, 240), (267, 80), (-821, 240), (89, 80), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]], [[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (0, 1), (2107, 240), (-1567, 80), (3521, 240), (-309, 80)], [(0, 1), (0, 1), (0, 1), (-1567, 80), (11003, 240), (-8623, 240), (2321, 240)], [(0, 1), (0, 1), (0, 1), (3521, 240), (-8623, 240), (7043, 240), (-647, 80)], [(0, 1), (0, 1), (0, 1), (-309, 80), (2321, 240), (-647, 80), (547, 240)]]]}}}
