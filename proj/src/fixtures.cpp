#include "nmfr/fixtures.hpp"

namespace nmfr {

namespace {

struct RawFixture {
  long m[5][5];
  long a[5][4];
  long b[4][5];
};

// clang-format off
constexpr RawFixture kRaw[] = {
    {{{104184, 229176, 94392, 336996, 77040}, {94663, 117528, 485070, 3404, 7979}, {535318, 168896, 1169348, 255210, 182576}, {156494, 310908, 1119179, 316225, 460213}, {763917, 337540, 876372, 1016103, 574666}},
     {{0, 0, 396, 108}, {0, 0, 4, 555}, {0, 470, 0, 812}, {455, 0, 0, 926}, {194, 761, 550, 0}},
     {{0, 260, 681, 695, 985}, {847, 0, 978, 543, 366}, {217, 522, 0, 851, 191}, {169, 208, 874, 0, 13}}},
    {{{210729, 402419, 94831, 122655, 193579}, {242132, 124696, 781275, 579876, 739205}, {618738, 197370, 434676, 846486, 1143228}, {50400, 233301, 221994, 60009, 34134}, {107007, 33966, 457653, 315558, 360201}},
     {{0, 0, 221, 407}, {0, 764, 0, 143}, {0, 444, 918, 0}, {249, 0, 0, 225}, {189, 336, 27, 0}},
     {{0, 149, 681, 241, 91}, {275, 0, 979, 759, 958}, {541, 215, 0, 555, 782}, {224, 872, 233, 0, 51}}},
    {{{573705, 806520, 167622, 246500, 531659}, {397096, 39600, 299176, 63720, 274120}, {131646, 403260, 30269, 226915, 264510}, {9114, 85160, 311182, 827468, 851798}, {147857, 3200, 351037, 599025, 697755}},
     {{0, 0, 425, 921}, {0, 472, 0, 80}, {0, 1, 391, 163}, {862, 0, 98, 0}, {640, 199, 0, 0}},
     {{0, 5, 361, 894, 927}, {743, 0, 603, 135, 525}, {93, 825, 0, 580, 538}, {580, 495, 182, 0, 329}}},
    {{{30893, 319912, 149770, 873, 111428}, {383490, 87990, 5580, 628440, 587250}, {560076, 1030324, 331070, 288045, 350647}, {203830, 305184, 277512, 264376, 205933}, {90911, 142936, 500784, 618842, 609633}},
     {{0, 0, 356, 9}, {0, 870, 0, 30}, {0, 302, 469, 731}, {403, 0, 0, 374}, {852, 190, 147, 0}},
     {{0, 0, 516, 566, 511}, {422, 73, 0, 719, 675}, {73, 878, 416, 0, 313}, {545, 816, 186, 97, 0}}},
    {{{553924, 99854, 348351, 183860, 20114}, {401268, 3372, 802602, 250881, 155672}, {1091328, 648606, 538803, 176341, 151574}, {472277, 506248, 136080, 591292, 591056}, {377978, 477454, 470565, 322776, 461574}},
     {{0, 0, 113, 634}, {0, 671, 0, 562}, {0, 71, 759, 576}, {697, 0, 0, 270}, {346, 520, 267, 0}},
     {{401, 724, 0, 736, 848}, {0, 0, 774, 131, 232}, {896, 850, 255, 0, 178}, {714, 6, 504, 290, 0}}},
    {{{292425, 60900, 31581, 170931, 7358}, {8056, 89782, 548546, 684912, 505520}, {98680, 758632, 1234092, 742008, 1123962}, {428876, 6358, 306000, 865802, 851174}, {888312, 823270, 758974, 620872, 1215638}},
     {{0, 0, 525, 13}, {0, 106, 0, 751}, {0, 888, 56, 795}, {578, 0, 0, 500}, {568, 866, 720, 0}},
     {{742, 11, 0, 709, 983}, {76, 847, 839, 0, 759}, {557, 116, 45, 303, 0}, {0, 0, 612, 912, 566}}},
    {{{348984, 214425, 353658, 81504, 608634}, {333621, 42811, 108265, 141389, 79520}, {457700, 5980, 467723, 866662, 841426}, {91308, 220419, 483054, 706686, 1353778}, {342940, 384918, 120318, 550726, 945556}},
     {{0, 0, 867, 288}, {0, 112, 0, 295}, {937, 0, 0, 460}, {832, 102, 761, 0}, {110, 898, 298, 0}},
     {{0, 0, 319, 786, 898}, {358, 348, 0, 517, 710}, {72, 243, 286, 0, 702}, {995, 13, 367, 283, 0}}},
    {{{88076, 294646, 658787, 902872, 244559}, {2216, 4216, 596705, 652698, 250465}, {279360, 180864, 769506, 1051380, 391634}, {553284, 826606, 765406, 293965, 883775}, {696039, 897917, 148301, 832169, 169525}},
     {{0, 0, 454, 713}, {0, 8, 0, 711}, {288, 0, 0, 926}, {239, 998, 232, 0}, {541, 37, 830, 0}},
     {{970, 628, 0, 699, 257}, {277, 527, 733, 0, 824}, {194, 649, 146, 547, 0}, {0, 0, 831, 918, 343}}},
    {{{948201, 723609, 958755, 591858, 397953}, {222448, 218040, 30429, 348793, 15825}, {329588, 7189, 623001, 12012, 469185}, {467424, 160704, 115092, 835504, 343912}, {1114797, 932972, 975775, 997164, 636096}},
     {{0, 0, 867, 753}, {0, 211, 0, 189}, {429, 0, 553, 0}, {556, 864, 0, 0}, {552, 270, 738, 923}},
     {{0, 0, 207, 28, 502}, {541, 186, 0, 949, 75}, {596, 13, 966, 0, 459}, {573, 946, 161, 786, 0}}},
    {{{264293, 89201, 411390, 21016, 54492}, {255674, 383544, 693861, 252463, 211653}, {212205, 6665, 216806, 6450, 103802}, {469696, 393840, 450523, 564374, 956188}, {288927, 197161, 105742, 300945, 433801}},
     {{0, 0, 239, 284}, {0, 351, 0, 893}, {86, 0, 215, 0}, {598, 954, 0, 175}, {154, 545, 31, 0}},
     {{0, 0, 526, 75, 637}, {474, 360, 0, 531, 603}, {987, 31, 798, 0, 228}, {100, 288, 777, 74, 0}}},
    {{{3230, 104329, 410573, 875858, 188790}, {22527, 66939, 204273, 81606, 13419}, {123988, 34611, 82056, 713192, 305348}, {596448, 338171, 559708, 395192, 624199}, {1460035, 246567, 270382, 584688, 1302924}},
     {{0, 0, 870, 323}, {0, 21, 0, 201}, {139, 0, 789, 0}, {623, 36, 0, 556}, {639, 911, 480, 0}},
     {{892, 249, 0, 272, 965}, {977, 96, 242, 0, 639}, {0, 0, 104, 856, 217}, {10, 323, 991, 406, 0}}},
    {{{64244, 119613, 501370, 37843, 259408}, {85315, 371265, 69495, 801995, 33660}, {83956, 5004, 737712, 957860, 230056}, {46287, 566084, 451221, 397664, 269200}, {144598, 34999, 923447, 1330101, 293244}},
     {{0, 0, 523, 41}, {0, 510, 0, 565}, {772, 0, 0, 556}, {64, 656, 417, 0}, {853, 13, 77, 901}},
     {{0, 0, 867, 576, 298}, {0, 718, 0, 550, 66}, {111, 228, 949, 0, 496}, {151, 9, 123, 923, 0}}},
    {{{310392, 195156, 317952, 492156, 169188}, {82320, 581120, 90160, 709152, 19024}, {519783, 180720, 1398418, 74387, 728134}, {70245, 244363, 505935, 527965, 176138}, {451143, 501811, 582768, 158964, 396949}},
     {{0, 0, 276, 756}, {0, 656, 0, 784}, {901, 0, 619, 16}, {440, 202, 0, 669}, {135, 493, 539, 0}},
     {{0, 0, 975, 71, 387}, {0, 703, 0, 303, 29}, {837, 288, 837, 0, 613}, {105, 153, 115, 651, 0}}},
    {{{72200, 697140, 19076, 191446, 252354}, {341204, 824131, 90064, 90804, 450580}, {292600, 86846, 319858, 425581, 57573}, {493288, 887466, 592538, 286784, 604086}, {809126, 281001, 625050, 719417, 276676}},
     {{0, 0, 76, 822}, {0, 433, 0, 644}, {490, 0, 308, 79}, {934, 626, 0, 570}, {831, 377, 539, 0}},
     {{0, 0, 495, 221, 68}, {788, 651, 208, 0, 584}, {950, 66, 251, 994, 0}, {0, 842, 0, 141, 307}}},
    {{{279265, 274840, 187355, 655433, 214052}, {270970, 68600, 734264, 1018514, 89856}, {341531, 544696, 235555, 187012, 948873}, {417526, 121556, 855865, 841310, 486784}, {15933, 287113, 730363, 580464, 439746}},
     {{0, 0, 236, 707}, {0, 702, 0, 686}, {849, 0, 507, 136}, {684, 725, 0, 470}, {47, 914, 326, 0}},
     {{339, 109, 235, 0, 576}, {0, 0, 787, 588, 128}, {0, 865, 0, 132, 907}, {395, 100, 265, 883, 0}}},
};
// clang-format on

template <std::size_t R, std::size_t C>
RationalMatrix to_matrix(const long (&block)[R][C]) {
  RationalMatrix out(R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(block[i][j]);
  return out;
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    std::size_t index = 1;
    for (const auto& raw : kRaw) out.push_back({index++, to_matrix(raw.m), to_matrix(raw.a), to_matrix(raw.b)});
    return out;
  }();
  return fixtures;
}

FixtureCheck verify_fixture(const Fixture& fixture) {
  FixtureCheck check;
  check.index = fixture.index;
  const FactorizationPair pair(fixture.a, fixture.b);
  const RationalMatrix product = pair.product();
  check.product_matches = product == fixture.m;
  if (product.rows() != fixture.m.rows() || product.cols() != fixture.m.cols()) {
    check.product_diffs.push_back("shape differs");
  } else {
    for (std::size_t i = 0; i < product.rows(); ++i)
      for (std::size_t j = 0; j < product.cols(); ++j)
        if (product(i, j) != fixture.m(i, j)) {
          check.product_diffs.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): expected " +
                                        to_string(fixture.m(i, j)) + ", got " + to_string(product(i, j)));
        }
  }
  const RigidityCertificate cert = certify(pair);
  check.classification = cert.classification;
  check.dim_w = cert.dim_w;
  check.kruskal_rank = cert.kruskal_rank;
  check.passed = check.product_matches && cert.classification == Classification::InfinitesimallyRigid &&
                 cert.dim_w == 4 && cert.kruskal_rank == std::optional<std::size_t>(12);
  return check;
}

namespace examples {

FactorizationPair triangles() {
  const RationalMatrix t{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  return FactorizationPair(t, t);
}

FactorizationPair partial_rigid_input() {
  return FactorizationPair(RationalMatrix{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}},
                           RationalMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

FactorizationPair partial_rigid_lift() {
  return FactorizationPair(RationalMatrix{{0, 1, 2, 1}, {1, 0, 2, 1}, {2, 1, 0, 1}, {1, 2, 0, 2}},
                           RationalMatrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 0, 0, 1}});
}

ZeroPattern rank3_pattern(std::size_t m, std::size_t n) {
  ZeroPattern p(m, n, 3);
  p.set_zero_a(0, 0, true);
  p.set_zero_a(1, 1, true);
  p.set_zero_a(2, 2, true);
  p.set_zero_a(3, 2, true);
  for (std::size_t k = 0; k < 3; ++k) p.set_zero_b(k, k, true);
  return p;
}

ZeroPattern rectangle_violator_6x5() {
  ZeroPattern p(6, 5, 4);
  const std::size_t a_zeros[][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 2}, {5, 3}};
  const std::size_t b_zeros[][2] = {{2, 0}, {2, 1}, {0, 2}, {1, 3}, {3, 4}};
  for (const auto& z : a_zeros) p.set_zero_a(z[0], z[1], true);
  for (const auto& z : b_zeros) p.set_zero_b(z[0], z[1], true);
  return p;
}

ZeroPattern twelve_zero_pattern() {
  ZeroPattern p(5, 7, 4);
  const std::size_t a_zeros[][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 3}};
  const std::size_t b_zeros[][2] = {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}};
  for (const auto& z : a_zeros) p.set_zero_a(z[0], z[1], true);
  for (const auto& z : b_zeros) p.set_zero_b(z[0], z[1], true);
  return p;
}

}  // namespace examples

}  // namespace nmfr
