#pragma once

// Fixed worked examples used as reference values.

#include <cstdint>
#include <vector>

namespace reference {

using Row = std::vector<std::uint64_t>;

inline const Row sequence_911 = {911, 2734, 1367, 4102, 2051, 6154, 3077, 9232, 4616, 2308, 1154, 577, 1732, 866,
                                 433, 1300, 650, 325,  976,  488,  244,  122,  61,   184,  92,   46,   23,   70,
                                 35,  106,  53,  160,  80,   40,   20,   10,   5,    16,   8,    4,    2,    1};

inline const Row odd_911 = {911, 1367, 2051, 3077, 577, 433, 325, 61, 23, 35, 53, 5, 1};

/// Network array for n = 0, 7 rows below u, columns 0..12. Row i starts at column i.
inline const std::vector<Row> network_n0 = {
    {1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047, 4095, 8191},
    {5, 11, 23, 47, 95, 191, 383, 767, 1535, 3071, 6143, 12287},
    {17, 35, 71, 143, 287, 575, 1151, 2303, 4607, 9215, 18431},
    {53, 107, 215, 431, 863, 1727, 3455, 6911, 13823, 27647},
    {161, 323, 647, 1295, 2591, 5183, 10367, 20735, 41471},
    {485, 971, 1943, 3887, 7775, 15551, 31103, 62207},
    {1457, 2915, 5831, 11663, 23327, 46655, 93311},
    {4373, 8747, 17495, 34991, 69983, 139967},
};

/// Network array for n = 3, 6 rows below u, columns 0..11.
inline const std::vector<Row> network_n3 = {
    {13, 27, 55, 111, 223, 447, 895, 1791, 3583, 7167, 14335, 28671},
    {41, 83, 167, 335, 671, 1343, 2687, 5375, 10751, 21503, 43007},
    {125, 251, 503, 1007, 2015, 4031, 8063, 16127, 32255, 64511},
    {377, 755, 1511, 3023, 6047, 12095, 24191, 48383, 96767},
    {1133, 2267, 4535, 9071, 18143, 36287, 72575, 145151},
    {3401, 6803, 13607, 27215, 54431, 108863, 217727},
    {10205, 20411, 40823, 81647, 163295, 326591},
};

inline const Row reverse_121 = {121, 242, 484, 161, 322, 107, 214, 71, 142, 47,
                                94,  31,  62,  124, 41,  82,  27,  54, 108, 216};
inline const Row reverse_odd_121 = {121, 161, 107, 71, 47, 31, 41, 27};

/// Unwind triangle of 2429: row i holds v_{i,0} .. v_{i,5-i}.
inline const std::vector<Row> triangle_2429 = {
    {2429, 809, 269, 89, 29, 9}, {1619, 539, 179, 59, 19}, {1079, 359, 119, 39}, {719, 239, 79}, {479, 159}, {319},
};

inline const Row descent_2429 = {2429, 1619, 1079, 719, 479, 319, 425, 283, 377, 251, 167, 111};

/// Main chain of the backward extension from 1, edges outward.
inline const Row backward_from_1 = {5,    3,    13,   17,    11,    7,      9,      37,     49,     65,    43,
                                    57,   229,  305,  203,   135,   541,    721,    961,    1281,   5125,  6833,
                                    4555, 6073, 8097, 32389, 43185, 172741, 230321, 153547, 204729};

}  // namespace reference
