#pragma once

// Ground and low-lying energy densities E/omega for sets 0..4, three decimals.
struct ReferenceRow {
  int omega, particle_number, level;
  double density[5];
};

inline constexpr ReferenceRow kReferenceDensities[] = {
    {2, 0, 0, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {2, 2, 0, {-0.500, -0.957, -1.368, -1.868, -2.331}},
    {2, 2, 1, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {2, 2, 2, {0.500, 0.457, 0.868, 0.368, 0.831}},
    {2, 4, 0, {0.000, -0.500, -0.500, -1.500, -1.500}},
    {4, 0, 0, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {4, 2, 0, {-0.250, -0.701, -0.923, -1.660, -1.902}},
    {4, 2, 1, {-0.250, -0.280, -0.451, -0.280, -0.451}},
    {4, 2, 2, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {4, 4, 0, {-0.500, -1.125, -1.797, -2.495, -3.007}},
    {4, 4, 1, {-0.250, -0.684, -1.400, -1.166, -1.896}},
    {4, 4, 2, {-0.250, -0.376, -0.480, -0.858, -0.855}},
    {4, 6, 0, {-0.250, -0.951, -1.173, -2.410, -2.652}},
    {4, 6, 1, {-0.250, -0.530, -0.701, -1.030, -1.201}},
    {4, 6, 2, {0.000, -0.250, -0.250, -0.750, -0.750}},
    {4, 8, 0, {0.000, -0.500, -0.500, -1.500, -1.500}},
    {6, 0, 0, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {6, 2, 0, {-0.167, -0.623, -0.777, -1.600, -1.764}},
    {6, 2, 1, {-0.167, -0.186, -0.300, -0.186, -0.300}},
    {6, 2, 2, {-0.167, -0.186, -0.300, -0.186, -0.300}},
    {6, 4, 0, {-0.333, -1.068, -1.492, -2.672, -3.012}},
    {6, 4, 1, {-0.333, -0.615, -1.098, -1.268, -1.761}},
    {6, 4, 2, {-0.333, -0.607, -1.060, -1.183, -1.500}},
    {6, 6, 0, {-0.500, -1.325, -2.363, -3.201, -3.723}},
    {6, 6, 1, {-0.333, -1.052, -2.257, -1.934, -2.991}},
    {6, 6, 2, {-0.333, -0.766, -1.100, -1.607, -2.049}},
    {6, 8, 0, {-0.333, -1.234, -1.659, -3.171, -3.512}},
    {6, 8, 1, {-0.333, -0.782, -1.265, -1.768, -2.261}},
    {6, 8, 2, {-0.333, -0.773, -1.227, -1.683, -2.000}},
    {6, 10, 0, {-0.167, -0.956, -1.110, -2.600, -2.764}},
    {6, 10, 1, {-0.167, -0.520, -0.634, -1.186, -1.300}},
    {6, 10, 2, {-0.167, -0.520, -0.634, -1.186, -1.300}},
    {6, 12, 0, {0.000, -0.500, -0.500, -1.500, -1.500}},
    {8, 0, 0, {0.000, 0.000, 0.000, 0.000, 0.000}},
    {8, 2, 0, {-0.125, -0.587, -0.705, -1.572, -1.696}},
    {8, 2, 1, {-0.125, -0.140, -0.225, -0.140, -0.225}},
    {8, 2, 2, {-0.125, -0.140, -0.225, -0.140, -0.225}},
    {8, 4, 0, {-0.250, -1.042, -1.350, -2.755, -3.010}},
    {8, 4, 1, {-0.250, -0.583, -0.948, -1.323, -1.694}},
    {8, 4, 2, {-0.250, -0.580, -0.901, -1.285, -1.515}},
    {8, 6, 0, {-0.375, -1.365, -2.057, -3.543, -3.936}},
    {8, 6, 1, {-0.375, -1.034, -1.919, -2.222, -3.000}},
    {8, 6, 2, {-0.375, -0.878, -1.688, -2.028, -2.400}},
    {8, 8, 0, {-0.500, -1.547, -3.041, -3.933, -4.456}},
    {8, 8, 1, {-0.375, -1.349, -3.017, -2.669, -3.900}},
    {8, 8, 2, {-0.375, -1.104, -1.735, -2.379, -3.168}},
    {8, 10, 0, {-0.375, -1.490, -2.182, -3.918, -4.311}},
    {8, 10, 1, {-0.375, -1.159, -2.044, -2.597, -3.375}},
    {8, 10, 2, {-0.375, -1.003, -1.813, -2.403, -2.775}},
    {8, 12, 0, {-0.250, -1.292, -1.600, -3.505, -3.760}},
    {8, 12, 1, {-0.250, -0.833, -1.198, -2.073, -2.444}},
    {8, 12, 2, {-0.250, -0.830, -1.151, -2.035, -2.265}},
    {8, 14, 0, {-0.125, -0.962, -1.080, -2.697, -2.821}},
    {8, 14, 1, {-0.125, -0.515, -0.600, -1.265, -1.350}},
    {8, 14, 2, {-0.125, -0.515, -0.600, -1.265, -1.350}},
    {8, 16, 0, {0.000, -0.500, -0.500, -1.500, -1.500}},
};
