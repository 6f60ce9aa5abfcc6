"""Embedded reference values for the bound tables on the built-in functions.

Table ids match the numbering used by the `table` CLI command.  Relative gaps
are percentages of the [f_min, f_max] reference range; table 6 carries raw
bound values and feasible-point values instead.  Timing columns from the
original runs are not reproduced.  A None entry marks a cell printed without
a value (non-unique density mode).
"""

from __future__ import annotations

# k rows of table 2
TABLE2_KS = list(range(1, 21)) + [25, 30, 35, 40, 45, 50]

# function key -> (builtin name, n)
FUNCTIONS = {
    "booth": ("booth", 2),
    "matyas": ("matyas", 2),
    "motzkin": ("motzkin", 2),
    "three_hump_camel": ("three_hump_camel", 2),
    "styblinski_tang_2": ("styblinski_tang", 2),
    "rosenbrock_2": ("rosenbrock", 2),
    "rosenbrock_3": ("rosenbrock", 3),
    "rosenbrock_4": ("rosenbrock", 4),
}

# relative gaps of the degree-k density bound, by function column
TABLE2 = {
    "booth": [10.8199, 9.6633, 8.2498, 7.0933, 6.6307, 5.8340, 5.5476, 5.0409,
              4.8354, 4.5324, 4.2234, 4.0949, 3.8340, 3.6523, 3.4952, 3.3013,
              3.2032, 3.0317, 2.9246, 2.8340, 2.3768, 2.0479, 1.7964, 1.6053,
              1.4456, 1.3129],
    "matyas": [17.3333, 12.0000, 11.0667, 8.8000, 8.1333, 6.9867, 6.5524,
               5.9048, 5.6190, 5.2245, 5.0317, 4.7778, 4.6444, 4.4741, 4.3798,
               4.2618, 4.1939, 4.1102, 4.0606, 4.0000, 3.4324, 2.8927, 2.5989,
               2.2609, 2.0800, 1.8595],
    "motzkin": [5.1852, 2.7020, 2.7020, 1.5732, 1.5732, 1.2615, 1.2615, 1.1002,
                1.1002, 1.0541, 1.0541, 1.0351, 1.0351, 1.0328, 1.0295, 1.0291,
                1.0175, 1.0048, 0.9953, 0.9907, 0.9583, 0.9227, 0.8725, 0.8179,
                0.7721, 0.7301],
    "three_hump_camel": [12.9776, 4.2038, 4.2038, 1.9822, 1.9822, 1.1892,
                         1.1892, 0.8458, 0.8458, 0.6771, 0.6771, 0.5144,
                         0.5144, 0.4236, 0.4236, 0.3539, 0.3539, 0.3016,
                         0.3016, 0.2628, 0.2064, 0.1557, 0.1336, 0.1105,
                         0.0993, 0.0868],
    "styblinski_tang_2": [20.0499, 18.5633, 17.2942, 15.8076, 15.0461, 14.2847,
                          13.8738, 13.4630, 13.2211, 12.9796, 12.6013, 12.1905,
                          11.8216, 11.5798, 11.3687, 10.9180, 10.5491, 10.1803,
                          9.9692, 9.7582, 8.7403, 7.7221, 7.0469, 6.3713,
                          5.8880, 5.4195],
    "rosenbrock_2": [7.7615, 6.0339, 4.5549, 3.8045, 3.6406, 3.3393, 3.0766,
                     2.6480, 2.5610, 2.3301, 2.2383, 1.9703, 1.9210, 1.7703,
                     1.6965, 1.5472, 1.5167, 1.4152, 1.3556, 1.2643, 1.0421,
                     0.8535, 0.7353, 0.6371, 0.5628, 0.5054],
    "rosenbrock_3": [10.1745, 7.7310, 6.8671, 6.1275, 5.2637, 4.4018, 4.0267,
                     3.7922, 3.4171, 3.2259, 3.0602, 2.8821, 2.7146, 2.6079,
                     2.4226, 2.2938, 2.1725, 2.0916, 1.9926, 1.9210, 1.5524,
                     1.3046, 1.1128, 0.9665, 0.8591, 0.7634],
    "rosenbrock_4": [11.0081, 9.3678, 7.7383, 7.1624, 6.6694, 6.0935, 5.5188,
                     4.9429, 4.3682, 4.1182, 3.9269, 3.6767, 3.4725, 3.2225,
                     3.0950, 2.9845, 2.8543, 2.7439, 2.6449, 2.5134, 2.0716,
                     1.7571, 1.5175, 1.3286, 1.1861, 1.0592],
}

# tables 3-5: k = 2, 4, ..., even; per function a pair of columns:
# "sos" is the relative gap of the half-degree SOS bound, "h" of the degree-k
# density bound (timings omitted)
TABLE345_KS = {3: list(range(2, 21, 2)), 4: list(range(2, 21, 2)),
               5: list(range(2, 19, 2))}

TABLE3 = {
    "booth": {
        "sos": [9.433, 6.264, 4.564, 3.764, 2.691, 2.45, 1.814, 1.607, 1.319, 1.107],
        "h": [9.663, 7.093, 5.834, 5.041, 4.532, 4.095, 3.652, 3.301, 3.032, 2.834],
    },
    "matyas": {
        "sos": [8.267, 5.322, 4.282, 3.894, 3.689, 2.996, 2.547, 2.043, 1.834, 1.478],
        "h": [12.0, 8.8, 6.987, 5.905, 5.224, 4.778, 4.474, 4.262, 4.11, 4.0],
    },
    "three_hump_camel": {
        "sos": [12.98, 1.416, 1.416, 0.4678, 0.4678, 0.2168, 0.2168, 0.1245,
                0.1245, 0.08363],
        "h": [4.204, 1.982, 1.189, 0.8458, 0.6771, 0.5144, 0.4236, 0.3539,
              0.3016, 0.2628],
    },
}

TABLE4 = {
    "motzkin": {
        "sos": [5.185, 1.31, 1.31, 1.024, 0.989, 0.989, 0.8752, 0.6982, 0.6982,
                0.6269],
        "h": [2.702, 1.573, 1.261, 1.1, 1.054, 1.035, 1.033, 1.029, 1.005,
              0.9907],
    },
    "styblinski_tang_2": {
        "sos": [19.92, 16.01, 13.38, 11.23, 10.12, 8.308, 6.678, 6.009, 5.342,
                4.36],
        "h": [18.56, 15.81, 14.28, 13.46, 12.98, 12.19, 11.58, 10.92, 10.18,
              9.758],
    },
    "rosenbrock_2": {
        "sos": [5.495, 3.899, 2.685, 1.936, 1.319, 1.07, 0.7716, 0.6614,
                0.4992, 0.4455],
        "h": [6.034, 3.804, 3.339, 2.648, 2.33, 1.97, 1.77, 1.547, 1.415,
              1.264],
    },
}

TABLE5 = {
    "rosenbrock_3": {
        "sos": [8.053, 5.046, 3.787, 2.649, 2.152, 1.556, 1.305, 0.9918, 0.8538],
        "h": [7.731, 6.128, 4.402, 3.792, 3.226, 2.882, 2.608, 2.294, 2.092],
    },
    "rosenbrock_4": {
        "sos": [8.945, 5.891, 4.577, 3.266, 2.686, 2.02, 1.73, 1.334, 1.169],
        "h": [9.368, 7.162, 6.093, 4.943, 4.118, 3.677, 3.222, 2.985, 2.744],
    },
}

# table 6: feasible-point strategies; raw values, not gaps.  "value" is the
# degree-k bound, "mode" is f at the density mode (None where the mode is not
# unique), "mean" is f at the density mean (convex functions only).
TABLE6_KS = [5, 10, 15, 20, 25, 30, 35, 40, 45, 50]

TABLE6 = {
    "booth": {
        "value": [172.0, 117.571, 90.6667, 73.5152, 61.6535, 53.1228, 46.5982,
                  41.6416, 37.4988, 34.0573],
        "mode": [96.222, 96.222, 27.580, 9.0, 4.5785, 1.6403, 1.0923, 0.8454,
                 2.0, 0.9784],
        "mean": [17.0, 25.806, 7.6777, 2.0, 1.8107, 0.41428, 0.53061, 0.64566,
                 0.80157, 0.22222],
    },
    "matyas": {
        "value": [8.1333, 5.2245, 4.3798, 4.0000, 3.4324, 2.8927, 2.5989,
                  2.2609, 2.0800, 1.8595],
        "mode": [4.0, 4.0, 4.0, 0.16, 0.3161, 0.0178, 0.1071, 0.0, 0.0, 0.0],
        "mean": [1.460, 2.0408, 2.5017, 0.1111, 0.2404, 0.0138, 0.0897, 0.0,
                 0.0, 0.0],
    },
    "motzkin": {
        "value": [1.2743, 0.8538, 0.8339, 0.8025, 0.7762, 0.7474, 0.7067,
                  0.6625, 0.6254, 0.5914],
        "mode": [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.4214, 0.2955, 0.1985, 0.1297],
    },
    "three_hump_camel": {
        "value": [40.593, 13.867, 8.6752, 5.3826, 4.2267, 3.1892, 2.7367,
                  2.2626, 2.0337, 1.7768],
        "mode": [None, None, 0.273, 0.0, 0.1653, 0.0, 0.110, 0.0, 0.0783, 0.0],
    },
}

# tables 7-8: one random realization per cell of the original sampling runs;
# matched statistically only, never cell by cell
TABLE78_KS = [5, 10, 15, 20, 25, 30, 35, 40, 45, 50]

TABLE7 = {  # motzkin: k -> (value, mean10, var10, min10, mean100, var100, min100)
    5: (1.2743, 0.8330, 0.0466, 0.2790, 1.1590, 4.2023, 0.0525),
    10: (0.8538, 0.7005, 0.0800, 0.1862, 0.8435, 0.1448, 0.1149),
    15: (0.8339, 0.9063, 0.0153, 0.6069, 0.8465, 0.0932, 0.0593),
    20: (0.8025, 0.7704, 0.0336, 0.3826, 0.9326, 1.6454, 0.0040),
    25: (0.7762, 0.7995, 0.1014, 0.2433, 0.7493, 0.0717, 0.0722),
    30: (0.7474, 1.0104, 1.2852, 0.1091, 0.8290, 0.8620, 0.0522),
    35: (0.7067, 0.5930, 0.0981, 0.1940, 0.7647, 1.3012, 0.0016),
    40: (0.6625, 0.6967, 0.0497, 0.2867, 0.6028, 0.1371, 0.0021),
    45: (0.6254, 0.6258, 0.0500, 0.3548, 0.7007, 0.2242, 0.0090),
    50: (0.5914, 0.6244, 0.0718, 0.3000, 0.5782, 0.1406, 0.0154),
}

TABLE8 = {  # three_hump_camel
    5: (40.593, 91.872, 27065.0, 0.90053, 53.656, 14575.0, 0.58086),
    10: (13.867, 11.312, 45.784, 0.8916, 14.273, 382.98, 0.018985),
    15: (8.6752, 5.6281, 31.311, 0.21853, 10.373, 778.32, 0.022282),
    20: (5.3826, 3.5174, 16.053, 0.43269, 9.4178, 653.27, 0.041752),
    25: (4.2267, 10.741, 776.55, 0.59616, 5.0642, 112.61, 0.039463),
    30: (3.1892, 2.2515, 8.6915, 0.063265, 2.2096, 6.2611, 0.040845),
    35: (2.7367, 1.5032, 1.4626, 0.0085016, 3.0679, 16.47, 0.24175),
    40: (2.2626, 1.3941, 1.1995, 0.21653, 2.3431, 17.735, 0.069473),
    45: (2.0337, 2.3904, 10.934, 0.57818, 1.8928, 3.6581, 0.050042),
    50: (1.7768, 1.664, 3.3983, 0.061995, 1.6301, 1.6966, 0.048476),
}

# tables 9-11: relative gaps of the powered bound, rows k=1..10, columns
# r=1..5.  Cells are the running scan's best including the uniform (k=0)
# candidate, which shows up only where every degree-k candidate is worse.
TABLE9_11_KS = list(range(1, 11))
TABLE9_11_RS = [1, 2, 3, 4, 5]

TABLE9 = {  # styblinski_tang n=2
    1: [20.0499, 20.7931, 21.3190, 21.3190, 21.3190],
    2: [18.5633, 18.4184, 18.7040, 19.0470, 19.3665],
    3: [17.2942, 17.2522, 16.9793, 16.7974, 16.6631],
    4: [15.8076, 15.5176, 15.2511, 14.6398, 14.1912],
    5: [15.0461, 14.3517, 14.3645, 13.8452, 13.3692],
    6: [14.2847, 13.1855, 12.6361, 12.2758, 12.0074],
    7: [13.8738, 12.0519, 10.9113, 10.1182, 9.5355],
    8: [13.4630, 10.9180, 9.1831, 7.9606, 7.0636],
    9: [13.2211, 10.3381, 8.4528, 7.1660, 6.2416],
    10: [12.9796, 9.7582, 7.7221, 6.3713, 5.4195],
}

TABLE10 = {  # rosenbrock n=3
    1: [10.1745, 9.3107, 8.9356, 8.7536, 8.6603],
    2: [7.7310, 6.5571, 6.0674, 5.8142, 5.6807],
    3: [6.8671, 5.7557, 5.1021, 4.7091, 4.4890],
    4: [6.1275, 4.7220, 3.7699, 3.2404, 2.9126],
    5: [5.2637, 3.5090, 3.0196, 2.9302, 2.9826],
    6: [4.4018, 2.8821, 2.4570, 1.9388, 1.5359],
    7: [4.0267, 2.8901, 2.1273, 1.6465, 1.3623],
    8: [3.7922, 2.5456, 1.8554, 1.4301, 1.1273],
    9: [3.4171, 2.3701, 1.7074, 1.3206, 1.0798],
    10: [3.2259, 2.0283, 1.4251, 1.1250, 0.8966],
}

TABLE11 = {  # rosenbrock n=4
    1: [11.0081, 10.4440, 10.1939, 10.0727, 10.0104],
    2: [9.3678, 8.5929, 8.2655, 8.0963, 8.0074],
    3: [7.7383, 6.7421, 6.3371, 6.1202, 6.0046],
    4: [7.1624, 6.2079, 5.7098, 5.4000, 5.2266],
    5: [6.6694, 5.1729, 4.2870, 3.8120, 3.5307],
    6: [6.0935, 4.4015, 3.3909, 2.8242, 2.4706],
    7: [5.5188, 3.5929, 2.8908, 2.6175, 2.5173],
    8: [4.9429, 3.1671, 2.5076, 1.9564, 1.5528],
    9: [4.3682, 2.8285, 2.2958, 1.7616, 1.4370],
    10: [4.1182, 2.7624, 2.1065, 1.6160, 1.2793],
}

TABLE_IDS = (2, 3, 4, 5, 6, 9, 10, 11)
