"""Published values the verification reports are checked against.

Polynomials are in the descending text form understood by ExactPoly.parse;
energies and integral bounds carry the six printed decimals.
"""

PHI_TILDE: dict[str, str] = {
    "S(10;2,6,1)": "x^10+9x^8+27x^6+31x^4+12x^2+1",
    "T(10;2,2|2,2)": "x^10+9x^8+26x^6+30x^4+13x^2+1",
    "S(11;2,6,2)": "x^11+10x^9+35x^7+52x^5+32x^3+6x",
    "T(11;2,2|2,2)": "x^11+10x^9+34x^7+48x^5+29x^3+6x",
    "T(11;3,2|2,2)": "x^11+10x^9+34x^7+49x^5+29x^3+5x",
    "T(12;2,2|2,2)": "x^12+11x^10+43x^8+74x^6+59x^4+19x^2+1",
    "T(12;3,2|2,2)": "x^12+11x^10+43x^8+74x^6+57x^4+17x^2+1",
    "T(12;4,2|2,2)": "x^12+11x^10+43x^8+75x^6+59x^4+18x^2+1",
    "T(13;2,2|2,2)": "x^13+12x^11+53x^9+108x^7+107x^5+48x^3+7x",
    "T(13;3,2|2,2)": "x^13+12x^11+53x^9+108x^7+106x^5+46x^3+6x",
    "T(13;4,2|2,2)": "x^13+12x^11+53x^9+108x^7+105x^5+46x^3+7x",
    "T(14;2,2|2,2)": "x^14+13x^12+64x^10+151x^8+181x^6+107x^4+26x^2+1",
    "T(14;4,2|2,2)": "x^14+13x^12+64x^10+151x^8+180x^6+105x^4+25x^2+1",
    "S(9;2,1,5)": "x^9+8x^7+20x^5+17x^3+4x",
    "S(9;2,2,2,2)": "x^9+8x^7+18x^5+16x^3+5x",
    "S(10;2,1,6)": "x^10+9x^8+27x^6+31x^4+12x^2+1",
    "S(10;2,2,2,3)": "x^10+9x^8+25x^6+28x^4+12x^2+1",
    "T(22;2,2|2,2)": (
        "x^22+21x^20+188x^18+939x^16+2879x^14+5625x^12"
        "+7046x^10+5546x^8+2598x^6+644x^4+64x^2+1"
    ),
    "S(22;2,1,18)": (
        "x^22+21x^20+189x^18+953x^16+2955x^14+5824x^12"
        "+7293x^10+5643x^8+2541x^6+595x^4+57x^2+1"
    ),
    "T(23;2,2|2,2)": (
        "x^23+22x^21+208x^19+1108x^17+3667x^15+7850x^13"
        "+10982x^11+9912x^9+5546x^7+1768x^5+268x^3+12x"
    ),
    "S(23;2,1,19)": (
        "x^23+22x^21+209x^19+1123x^17+3756x^15+8113x^13"
        "+11375x^11+10153x^9+5511x^7+1672x^5+241x^3+11x"
    ),
    "S(31;2,7,21)": (
        "x^31+30x^29+405x^27+3252x^25+17296x^23+64220x^21+170943x^19"
        "+329768x^17+460696x^15+460851x^13+322620x^11+152131x^9"
        "+45426x^7+7738x^5+619x^3+15x"
    ),
    "S(31;4,4,22)": (
        "x^31+30x^29+405x^27+3252x^25+17295x^23+64200x^21+170772x^19"
        "+328952x^17+458317x^15+456496x^13+317681x^11+148864x^9"
        "+44349x^7+7644x^5+636x^3+16x"
    ),
    "S(32;2,7,22)": (
        "x^32+31x^30+434x^28+3629x^26+20198x^24+78938x^22+222724x^20"
        "+459365x^18+693530x^16+760145x^14+593801x^12+320464x^10"
        "+113705x^8+24470x^6+2774x^4+125x^2+1"
    ),
    "S(32;4,4,23)": (
        "x^32+31x^30+434x^28+3629x^26+20197x^24+78917x^22+222534x^20"
        "+458396x^18+690471x^16+753971x^14+585871x^12+314249x^10"
        "+111032x^8+24007x^6+2792x^4+132x^2+1"
    ),
}

# tree spec -> printed energy
ENERGY: dict[str, float] = {
    "S(10;2,6,1)": 11.937511,
    "T(10;2,2|2,2)": 11.924777,
    "T(11;2,2|2,2)": 13.059967,
    "T(11;3,2|2,2)": 13.015698,
    "S(22;2,1,18)": 27.182092,
    "T(22;2,2|2,2)": 27.175139,
    "S(31;2,7,21)": 38.616923,
    "S(31;4,4,22)": 38.616742,
}

# h1 g0 - h0 g1 of each base quartet, as a product of printed factors
CROSS_DIFFERENCE_FACTORS: dict[str, list[str]] = {
    "fourth-max": ["2x^15+22x^13+89x^11+168x^9+156x^7+66x^5+9x^3"],
    "broom-longest-arm": ["x", "x-1", "x+1", "x^6+7x^4+11x^2+1", "x^2+1", "x^2+1", "x^2+1"],
    "spider-vs-two-leg": ["x", "2x^4+8x^2+1", "x^2+1", "x^2+1", "x^2+1"],
    "broom-vs-two-leg": ["x", "x^8+7x^6+11x^4-4x^2-1", "x^2+1", "x^2+1", "x^2+1"],
    "three-arm-vs-two-leg": [
        "x",
        "x^4+3x^2+1",
        "x^12+12x^10+53x^8+107x^6+99x^4+34x^2+1",
    ],
}

# right end of the interval where h1 g0 - h0 g1 is negative
NEGATIVE_SET_END: dict[str, float] = {
    "broom-longest-arm": 1.0,
    "broom-vs-two-leg": 0.663073,
}

# lower bounds on E(H(k)) - E(G(k))
GAP_BOUND: dict[str, float] = {
    "fourth-max": 0.012734,
    "broom-longest-arm": 0.005951,
    "spider-vs-two-leg": 0.0,
    "broom-vs-two-leg": 0.000425,
    "three-arm-vs-two-leg": 0.000181,
}

ENERGY_TOLERANCE = 1e-5
BOUND_TOLERANCE = 5e-5
