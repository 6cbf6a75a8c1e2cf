// Generated by tools/make_sobol_table.py -- do not edit by hand.
// Joe-Kuo primitive polynomials and initial direction numbers
// (new-joe-kuo-6) for Sobol' sequence dimensions 2..168.

#include "gsa/sobol.hpp"

namespace gsa::detail {

const int sobol_table_dims = 168;

// degree, inner polynomial coefficients, offset into m_values
const SobolPolynomial sobol_polynomials[167] = {
    {1, 0, 0}, {2, 1, 1}, {3, 1, 3}, {3, 2, 6}, {4, 1, 9}, {4, 4, 13},
    {5, 2, 17}, {5, 4, 22}, {5, 7, 27}, {5, 11, 32}, {5, 13, 37}, {5, 14, 42},
    {6, 1, 47}, {6, 13, 53}, {6, 16, 59}, {6, 19, 65}, {6, 22, 71}, {6, 25, 77},
    {7, 1, 83}, {7, 4, 90}, {7, 7, 97}, {7, 8, 104}, {7, 14, 111}, {7, 19, 118},
    {7, 21, 125}, {7, 28, 132}, {7, 31, 139}, {7, 32, 146}, {7, 37, 153}, {7, 41, 160},
    {7, 42, 167}, {7, 50, 174}, {7, 55, 181}, {7, 56, 188}, {7, 59, 195}, {7, 62, 202},
    {8, 14, 209}, {8, 21, 217}, {8, 22, 225}, {8, 38, 233}, {8, 47, 241}, {8, 49, 249},
    {8, 50, 257}, {8, 52, 265}, {8, 56, 273}, {8, 67, 281}, {8, 70, 289}, {8, 84, 297},
    {8, 97, 305}, {8, 103, 313}, {8, 115, 321}, {8, 122, 329}, {9, 8, 337}, {9, 13, 346},
    {9, 16, 355}, {9, 22, 364}, {9, 25, 373}, {9, 44, 382}, {9, 47, 391}, {9, 52, 400},
    {9, 55, 409}, {9, 59, 418}, {9, 62, 427}, {9, 67, 436}, {9, 74, 445}, {9, 81, 454},
    {9, 82, 463}, {9, 87, 472}, {9, 91, 481}, {9, 94, 490}, {9, 103, 499}, {9, 104, 508},
    {9, 109, 517}, {9, 122, 526}, {9, 124, 535}, {9, 137, 544}, {9, 138, 553}, {9, 143, 562},
    {9, 145, 571}, {9, 152, 580}, {9, 157, 589}, {9, 167, 598}, {9, 173, 607}, {9, 176, 616},
    {9, 181, 625}, {9, 182, 634}, {9, 185, 643}, {9, 191, 652}, {9, 194, 661}, {9, 199, 670},
    {9, 218, 679}, {9, 220, 688}, {9, 227, 697}, {9, 229, 706}, {9, 230, 715}, {9, 234, 724},
    {9, 236, 733}, {9, 241, 742}, {9, 244, 751}, {9, 253, 760}, {10, 4, 769}, {10, 13, 779},
    {10, 19, 789}, {10, 22, 799}, {10, 50, 809}, {10, 55, 819}, {10, 64, 829}, {10, 69, 839},
    {10, 98, 849}, {10, 107, 859}, {10, 115, 869}, {10, 121, 879}, {10, 127, 889}, {10, 134, 899},
    {10, 140, 909}, {10, 145, 919}, {10, 152, 929}, {10, 158, 939}, {10, 161, 949}, {10, 171, 959},
    {10, 181, 969}, {10, 194, 979}, {10, 199, 989}, {10, 203, 999}, {10, 208, 1009}, {10, 227, 1019},
    {10, 242, 1029}, {10, 251, 1039}, {10, 253, 1049}, {10, 265, 1059}, {10, 266, 1069}, {10, 274, 1079},
    {10, 283, 1089}, {10, 289, 1099}, {10, 295, 1109}, {10, 301, 1119}, {10, 316, 1129}, {10, 319, 1139},
    {10, 324, 1149}, {10, 346, 1159}, {10, 352, 1169}, {10, 361, 1179}, {10, 367, 1189}, {10, 382, 1199},
    {10, 395, 1209}, {10, 398, 1219}, {10, 400, 1229}, {10, 412, 1239}, {10, 419, 1249}, {10, 422, 1259},
    {10, 426, 1269}, {10, 428, 1279}, {10, 433, 1289}, {10, 446, 1299}, {10, 454, 1309}, {10, 457, 1319},
    {10, 472, 1329}, {10, 493, 1339}, {10, 505, 1349}, {10, 508, 1359}, {11, 2, 1369}, {11, 11, 1380},
    {11, 21, 1391}, {11, 22, 1402}, {11, 35, 1413}, {11, 49, 1424}, {11, 50, 1435},
};

const unsigned sobol_m_values[1446] = {
    1, 1, 3, 1, 3, 1, 1, 1, 1, 1, 1, 3, 3, 1, 3, 5, 13, 1, 1, 5,
    5, 17, 1, 1, 5, 5, 5, 1, 1, 7, 11, 19, 1, 1, 5, 1, 1, 1, 1, 1,
    3, 11, 1, 3, 5, 5, 31, 1, 3, 3, 9, 7, 49, 1, 1, 1, 15, 21, 21, 1,
    3, 1, 13, 27, 49, 1, 1, 1, 15, 7, 5, 1, 3, 1, 15, 13, 25, 1, 1, 5,
    5, 19, 61, 1, 3, 7, 11, 23, 15, 103, 1, 3, 7, 13, 13, 15, 69, 1, 1, 3,
    13, 7, 35, 63, 1, 3, 5, 9, 1, 25, 53, 1, 3, 1, 13, 9, 35, 107, 1, 3,
    1, 5, 27, 61, 31, 1, 1, 5, 11, 19, 41, 61, 1, 3, 5, 3, 3, 13, 69, 1,
    1, 7, 13, 1, 19, 1, 1, 3, 7, 5, 13, 19, 59, 1, 1, 3, 9, 25, 29, 41,
    1, 3, 5, 13, 23, 1, 55, 1, 3, 7, 3, 13, 59, 17, 1, 3, 1, 3, 5, 53,
    69, 1, 1, 5, 5, 23, 33, 13, 1, 1, 7, 7, 1, 61, 123, 1, 1, 7, 9, 13,
    61, 49, 1, 3, 3, 5, 3, 55, 33, 1, 3, 1, 15, 31, 13, 49, 245, 1, 3, 5,
    15, 31, 59, 63, 97, 1, 3, 1, 11, 11, 11, 77, 249, 1, 3, 1, 11, 27, 43, 71,
    9, 1, 1, 7, 15, 21, 11, 81, 45, 1, 3, 7, 3, 25, 31, 65, 79, 1, 3, 1,
    1, 19, 11, 3, 205, 1, 1, 5, 9, 19, 21, 29, 157, 1, 3, 7, 11, 1, 33, 89,
    185, 1, 3, 3, 3, 15, 9, 79, 71, 1, 3, 7, 11, 15, 39, 119, 27, 1, 1, 3,
    1, 11, 31, 97, 225, 1, 1, 1, 3, 23, 43, 57, 177, 1, 3, 7, 7, 17, 17, 37,
    71, 1, 3, 1, 5, 27, 63, 123, 213, 1, 1, 3, 5, 11, 43, 53, 133, 1, 3, 5,
    5, 29, 17, 47, 173, 479, 1, 3, 3, 11, 3, 1, 109, 9, 69, 1, 1, 1, 5, 17,
    39, 23, 5, 343, 1, 3, 1, 5, 25, 15, 31, 103, 499, 1, 1, 1, 11, 11, 17, 63,
    105, 183, 1, 1, 5, 11, 9, 29, 97, 231, 363, 1, 1, 5, 15, 19, 45, 41, 7, 383,
    1, 3, 7, 7, 31, 19, 83, 137, 221, 1, 1, 1, 3, 23, 15, 111, 223, 83, 1, 1,
    5, 13, 31, 15, 55, 25, 161, 1, 1, 3, 13, 25, 47, 39, 87, 257, 1, 1, 1, 11,
    21, 53, 125, 249, 293, 1, 1, 7, 11, 11, 7, 57, 79, 323, 1, 1, 5, 5, 17, 13,
    81, 3, 131, 1, 1, 7, 13, 23, 7, 65, 251, 475, 1, 3, 5, 1, 9, 43, 3, 149,
    11, 1, 1, 3, 13, 31, 13, 13, 255, 487, 1, 3, 3, 1, 5, 63, 89, 91, 127, 1,
    1, 3, 3, 1, 19, 123, 127, 237, 1, 1, 5, 7, 23, 31, 37, 243, 289, 1, 1, 5,
    11, 17, 53, 117, 183, 491, 1, 1, 1, 5, 1, 13, 13, 209, 345, 1, 1, 3, 15, 1,
    57, 115, 7, 33, 1, 3, 1, 11, 7, 43, 81, 207, 175, 1, 3, 1, 1, 15, 27, 63,
    255, 49, 1, 3, 5, 3, 27, 61, 105, 171, 305, 1, 1, 5, 3, 1, 3, 57, 249, 149,
    1, 1, 3, 5, 5, 57, 15, 13, 159, 1, 1, 1, 11, 7, 11, 105, 141, 225, 1, 3,
    3, 5, 27, 59, 121, 101, 271, 1, 3, 5, 9, 11, 49, 51, 59, 115, 1, 1, 7, 1,
    23, 45, 125, 71, 419, 1, 1, 3, 5, 23, 5, 105, 109, 75, 1, 1, 7, 15, 7, 11,
    67, 121, 453, 1, 3, 7, 3, 9, 13, 31, 27, 449, 1, 3, 1, 15, 19, 39, 39, 89,
    15, 1, 1, 1, 1, 1, 33, 73, 145, 379, 1, 3, 1, 15, 15, 43, 29, 13, 483, 1,
    1, 7, 3, 19, 27, 85, 131, 431, 1, 3, 3, 3, 5, 35, 23, 195, 349, 1, 3, 3,
    7, 9, 27, 39, 59, 297, 1, 1, 3, 9, 11, 17, 13, 241, 157, 1, 3, 7, 15, 25,
    57, 33, 189, 213, 1, 1, 7, 1, 9, 55, 73, 83, 217, 1, 3, 3, 13, 19, 27, 23,
    113, 249, 1, 3, 5, 3, 23, 43, 3, 253, 479, 1, 1, 5, 5, 11, 5, 45, 117, 217,
    1, 3, 3, 7, 29, 37, 33, 123, 147, 1, 3, 1, 15, 5, 5, 37, 227, 223, 459, 1,
    1, 7, 5, 5, 39, 63, 255, 135, 487, 1, 3, 1, 7, 9, 7, 87, 249, 217, 599, 1,
    1, 3, 13, 9, 47, 7, 225, 363, 247, 1, 3, 7, 13, 19, 13, 9, 67, 9, 737, 1,
    3, 5, 5, 19, 59, 7, 41, 319, 677, 1, 1, 5, 3, 31, 63, 15, 43, 207, 789, 1,
    1, 7, 9, 13, 39, 3, 47, 497, 169, 1, 3, 1, 7, 21, 17, 97, 19, 415, 905, 1,
    3, 7, 1, 3, 31, 71, 111, 165, 127, 1, 1, 5, 11, 1, 61, 83, 119, 203, 847, 1,
    3, 3, 13, 9, 61, 19, 97, 47, 35, 1, 1, 7, 7, 15, 29, 63, 95, 417, 469, 1,
    3, 1, 9, 25, 9, 71, 57, 213, 385, 1, 3, 5, 13, 31, 47, 101, 57, 39, 341, 1,
    1, 3, 3, 31, 57, 125, 173, 365, 551, 1, 3, 7, 1, 13, 57, 67, 157, 451, 707, 1,
    1, 1, 7, 21, 13, 105, 89, 429, 965, 1, 1, 5, 9, 17, 51, 45, 119, 157, 141, 1,
    3, 7, 7, 13, 45, 91, 9, 129, 741, 1, 3, 7, 1, 23, 57, 67, 141, 151, 571, 1,
    1, 3, 11, 17, 47, 93, 107, 375, 157, 1, 3, 3, 5, 11, 21, 43, 51, 169, 915, 1,
    1, 5, 3, 15, 55, 101, 67, 455, 625, 1, 3, 5, 9, 1, 23, 29, 47, 345, 595, 1,
    3, 7, 7, 5, 49, 29, 155, 323, 589, 1, 3, 3, 7, 5, 41, 127, 61, 261, 717, 1,
    3, 7, 7, 17, 23, 117, 67, 129, 1009, 1, 1, 3, 13, 11, 39, 21, 207, 123, 305, 1,
    1, 3, 9, 29, 3, 95, 47, 231, 73, 1, 3, 1, 9, 1, 29, 117, 21, 441, 259, 1,
    3, 1, 13, 21, 39, 125, 211, 439, 723, 1, 1, 7, 3, 17, 63, 115, 89, 49, 773, 1,
    3, 7, 13, 11, 33, 101, 107, 63, 73, 1, 1, 5, 5, 13, 57, 63, 135, 437, 177, 1,
    1, 3, 7, 27, 63, 93, 47, 417, 483, 1, 1, 3, 1, 23, 29, 1, 191, 49, 23, 1,
    1, 3, 15, 25, 55, 9, 101, 219, 607, 1, 3, 1, 7, 7, 19, 51, 251, 393, 307, 1,
    3, 3, 3, 25, 55, 17, 75, 337, 3, 1, 1, 1, 13, 25, 17, 65, 45, 479, 413, 1,
    1, 7, 7, 27, 49, 99, 161, 213, 727, 1, 3, 5, 1, 23, 5, 43, 41, 251, 857, 1,
    3, 3, 7, 11, 61, 39, 87, 383, 835, 1, 1, 3, 15, 13, 7, 29, 7, 505, 923, 1,
    3, 7, 1, 5, 31, 47, 157, 445, 501, 1, 1, 3, 7, 1, 43, 9, 147, 115, 605, 1,
    3, 3, 13, 5, 1, 119, 211, 455, 1001, 1, 1, 3, 5, 13, 19, 3, 243, 75, 843, 1,
    3, 7, 7, 1, 19, 91, 249, 357, 589, 1, 1, 1, 9, 1, 25, 109, 197, 279, 411, 1,
    3, 1, 15, 23, 57, 59, 135, 191, 75, 1, 1, 5, 15, 29, 21, 39, 253, 383, 349, 1,
    3, 3, 5, 19, 45, 61, 151, 199, 981, 1, 3, 5, 13, 9, 61, 107, 141, 141, 1, 1,
    3, 1, 11, 27, 25, 85, 105, 309, 979, 1, 3, 3, 11, 19, 7, 115, 223, 349, 43, 1,
    1, 7, 9, 21, 39, 123, 21, 275, 927, 1, 1, 7, 13, 15, 41, 47, 243, 303, 437, 1,
    1, 1, 7, 7, 3, 15, 99, 409, 719, 1, 3, 3, 15, 27, 49, 113, 123, 113, 67, 469,
    1, 3, 7, 11, 3, 23, 87, 169, 119, 483, 199, 1, 1, 5, 15, 7, 17, 109, 229, 179,
    213, 741, 1, 1, 5, 13, 11, 17, 25, 135, 403, 557, 1433, 1, 3, 1, 1, 1, 61, 67,
    215, 189, 945, 1243, 1, 1, 7, 13, 17, 33, 9, 221, 429, 217, 1679, 1, 1, 3, 11, 27,
    3, 15, 93, 93, 865, 1049,
};

}  // namespace gsa::detail
