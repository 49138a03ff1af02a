// The degree-86 numerator polynomial N of the orbit-count closed form
// (see closed_form_Gstar). Transcribed data; do not edit by hand without
// updating the checksum test (N(1) = 7264857600).

#include "cubemagic/series.hpp"

namespace cubemagic {

namespace {

constexpr std::int64_t kNCoeffs[] = {
    6, 37, 158, 514, 1451, 3621,
    8284, 17569, 35070, 66312, 119823, 207728,
    347391, 561997, 882742, 1348938, 2010779, 2928154,
    4173803, 5830039, 7992068, 10761439, 14249943, 18568515,
    23832260, 30144300, 37602936, 46279969, 56232269, 67474300,
    79996493, 93732893, 108588539, 124402462, 140987325, 158087400,
    175431907, 192688207, 209528800, 225578607, 240495470, 253908861,
    265511859, 274990182, 282121684, 286693656, 288607900, 287784490,
    284268896, 278123786, 269535199, 258694438, 245902795, 231445735,
    215696263, 198987144, 181711391, 164197341, 146808026, 129822649,
    113534001, 98140965, 83842462, 70743178, 58943269, 48456737,
    39295487, 31400920, 24718505, 19141614, 14576321, 10894761,
    7988749, 5731894, 4021600, 2748644, 1828595, 1177014,
    732167, 435841, 247875, 132180, 65960, 29549,
    11862, 3740, 897,
};

}  // namespace

const IntPoly& gstar_numerator_n() {
    static const IntPoly n = [] {
        IntPoly p;
        p.c.assign(std::begin(kNCoeffs), std::end(kNCoeffs));
        p.normalize();
        return p;
    }();
    return n;
}

}  // namespace cubemagic
