"""Published reference values the reproduction is checked against."""

# label: (n, m, m_plus, m_minus, balanced, unbalanced, T, cc, density, L, F, C, D)
ROWS = {
    "Highland tribes": (16, 116, 58, 58, 59, 9, 0.870, 0.527, 0.483, 14, 0.759, 0.806, 1.000),
    "College House A": (21, 94, 51, 43, 46, 11, 0.807, 0.392, 0.224, 17, 0.638, 0.793, 0.861),
    "College House B": (17, 83, 41, 42, 24, 22, 0.522, 0.398, 0.305, 19, 0.542, 0.739, 0.811),
    "College House C": (20, 81, 41, 40, 26, 3, 0.896, 0.271, 0.213, 5, 0.877, 0.909, 0.973),
    "Sampson T2": (18, 104, 55, 49, 41, 19, 0.683, 0.349, 0.340, 21, 0.596, 0.827, 0.769),
    "Sampson T3": (18, 105, 57, 48, 52, 24, 0.684, 0.445, 0.343, 20, 0.619, 0.825, 0.792),
    "Sampson T4": (18, 103, 56, 47, 49, 16, 0.754, 0.412, 0.337, 14, 0.728, 0.850, 0.884),
    "Newcomb 00": (17, 102, 51, 51, 38, 37, 0.507, 0.376, 0.375, 26, 0.490, 0.745, 0.745),
    "Newcomb 01": (17, 102, 51, 51, 35, 23, 0.603, 0.406, 0.375, 22, 0.569, 0.746, 0.837),
    "Newcomb 02": (17, 102, 51, 51, 26, 28, 0.481, 0.406, 0.375, 25, 0.510, 0.741, 0.771),
    "Newcomb 03": (17, 102, 51, 51, 32, 18, 0.640, 0.376, 0.375, 25, 0.510, 0.741, 0.771),
    "Newcomb 04": (17, 102, 51, 51, 47, 36, 0.566, 0.435, 0.375, 27, 0.471, 0.731, 0.740),
    "Newcomb 05": (17, 102, 51, 51, 44, 41, 0.518, 0.492, 0.375, 24, 0.529, 0.745, 0.787),
    "Newcomb 06": (17, 102, 51, 51, 50, 53, 0.485, 0.484, 0.375, 25, 0.510, 0.760, 0.750),
    "Newcomb 07": (17, 102, 51, 51, 50, 49, 0.505, 0.525, 0.375, 25, 0.510, 0.724, 0.795),
    "Newcomb 08": (17, 102, 51, 51, 40, 53, 0.430, 0.543, 0.375, 26, 0.490, 0.727, 0.766),
    "Newcomb 10": (17, 102, 51, 51, 40, 37, 0.519, 0.461, 0.375, 26, 0.490, 0.736, 0.755),
    "Newcomb 11": (17, 102, 51, 51, 37, 36, 0.507, 0.467, 0.375, 22, 0.569, 0.796, 0.774),
    "Newcomb 12": (17, 102, 51, 51, 38, 34, 0.528, 0.486, 0.375, 22, 0.569, 0.784, 0.784),
    "Newcomb 13": (17, 102, 51, 51, 44, 46, 0.489, 0.516, 0.375, 21, 0.588, 0.788, 0.800),
    "Newcomb 14": (17, 102, 51, 51, 44, 38, 0.537, 0.475, 0.375, 21, 0.588, 0.800, 0.788),
    "Newcomb 15": (17, 102, 51, 51, 50, 37, 0.575, 0.498, 0.375, 23, 0.549, 0.769, 0.780),
    "Philosophers master-pupil": (712, 1354, 1264, 90, 18, 1, 0.947, 0.038, 0.003, 4, 0.994, 0.998, 0.988),
    "Philosophers acquaintance": (346, 660, 474, 186, 72, 2, 0.917, 0.091, 0.006, 6, 0.982, 0.996, 0.979),
    "Philosophers flat": (855, 2010, 1736, 274, 78, 19, 0.804, 0.089, 0.003, 60, 0.940, 0.976, 0.931),
}

# (T, F) of the eight static networks, large ones included.
STATIC_T_F = {
    "Reddit": (0.704, 0.859),
    "Wikipedia election": (0.751, 0.710),
    "Bitcoin OTC": (0.866, 0.908),
    "Bitcoin Alpha": (0.845, 0.909),
    "Highland tribes": (0.870, 0.759),
    "College House A": (0.807, 0.638),
    "College House B": (0.522, 0.542),
    "College House C": (0.896, 0.877),
}
LARGE_STATIC = ("Reddit", "Wikipedia election", "Bitcoin OTC", "Bitcoin Alpha")

HOUSE_A_OPTIMA = [
    ({"4", "8", "10", "15", "16", "18", "3", "9", "11"}, 0.804, 0.842),
    ({"4", "8", "10", "15", "16", "18", "9", "11", "19"}, 0.793, 0.861),
    ({"4", "8", "10", "15", "16", "18", "19"}, 0.793, 0.861),
]

TRIBES_300_SHARE = 0.87
BITCOIN_ALPHA_L = 1098
BITCOIN_ALPHA_M = 24186
NEWCOMB_MEAN_F = 0.53

R_T_F = 0.697
R_F_C_NEWCOMB = 0.849
R_F_D_NEWCOMB = 0.717
