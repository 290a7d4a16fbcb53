#include "cyclosum/harness.hpp"

namespace cyclosum {

// One identity per line. Atom arguments follow make_atom().
const std::string& default_catalog_text()
{
    static const std::string text = R"JSONL(
{"id":"m2.sigma1-sigma2","m":2,"weights":[1,-1],"paper_value_atoms":[{"coef":"1","atom":"LOG","args":[2]}],"citation":"Mercator series: alternating harmonic series, integral of 1/(1+x)","character":"f^(2)_2"}
{"id":"m4.gregory-leibniz","m":4,"weights":[1,0,-1,0],"paper_value_atoms":[{"coef":"1/4","atom":"PI_OVER_SQRT","args":[1]}],"citation":"Gregory-Leibniz series for arctan(1)","character":"chi^(4)_2"}
{"id":"m3.sigma1-sigma2","m":3,"weights":[1,-1,0],"paper_value_atoms":[{"coef":"1/3","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 3: integral of 1/(1+x+x^2) as the series of the real character mod 3","character":"chi^(3)_2"}
{"id":"m4.sigma1-sigma3","m":4,"weights":[1,0,-1,0],"paper_value_atoms":[{"coef":"1/4","atom":"PI_OVER_SQRT","args":[1]}],"citation":"m = 4: grouping (x^2-1)(x^2+1), integral of 1/(1+x^2)","character":"chi^(4)_2"}
{"id":"m4.sigma1-sigma2","m":4,"weights":[1,-1,0,0],"paper_value_atoms":[{"coef":"1/4","atom":"LOG","args":[2]},{"coef":"1/8","atom":"PI_OVER_SQRT","args":[1]}],"citation":"m = 4: grouping (x-1)(1+x+x^2+x^3), integral of 1/(1+x+x^2+x^3)","character":"f^(4)_2"}
{"id":"m6.integral-inverse-1+x3","m":6,"weights":[1,0,0,-1,0,0],"paper_value_atoms":[{"coef":"1/3","atom":"LOG","args":[2]},{"coef":"1/3","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: integral of 1/(1+x^3) by partial fractions","character":"f^(6)_4"}
{"id":"m6.sigma1-sigma4","m":6,"weights":[1,0,0,-1,0,0],"paper_value_atoms":[{"coef":"1/3","atom":"LOG","args":[2]},{"coef":"1/3","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: grouping (x^3-1)(x^3+1), series of 1/(1+x^3)","character":"f^(6)_4"}
{"id":"m6.sigma1+sigma2-sigma4-sigma5","m":6,"weights":[1,1,0,-1,-1,0],"paper_value_atoms":[{"coef":"2/3","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: double series from 1/(1-x+x^2)","character":"f^(6)_5"}
{"id":"m6.sigma1-sigma5","m":6,"weights":[1,0,0,0,-1,0],"paper_value_atoms":[{"coef":"1/4","atom":"LOG","args":[3]}],"citation":"m = 6: table of divergent sums, difference S(6,1) - S(6,5)","side_claims":[{"kind":"asymptotic","residue":1,"stated":[{"coef":"1/6","atom":"EULER_GAMMA","args":[]},{"coef":"1/3","atom":"LOG","args":[2]},{"coef":"1/4","atom":"LOG","args":[3]},{"coef":"1/3","atom":"LOG","args":[2]},{"coef":"1/4","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: table of divergent sums, constant of S(6,1)"},{"kind":"asymptotic","residue":4,"stated":[{"coef":"1/6","atom":"EULER_GAMMA","args":[]},{"coef":"1/4","atom":"LOG","args":[3]},{"coef":"-1/12","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: table of divergent sums, constant of S(6,4)"},{"kind":"value","weights":[1,0,0,-1,0,0],"stated":[{"coef":"1/3","atom":"LOG","args":[3]},{"coef":"1/3","atom":"PI_OVER_SQRT","args":[3]}],"citation":"m = 6: difference S(6,1) - S(6,4) stated after the table of divergent sums"}]}
{"id":"m6.character-chi2","m":6,"weights":[1,0,0,0,-1,0],"paper_value_atoms":[{"coef":"1/4","atom":"LOG","args":[3]}],"citation":"m = 6: series of the real character mod 6","character":"chi^(6)_2"}
{"id":"m5.sigma1-sigma2","m":5,"weights":[1,-1,0,0,0],"paper_value_atoms":[],"citation":"m = 5: integral of 1/(1+x+x^2+x^3+x^4), closed form not written out","character":"f^(5)_2"}
{"id":"m5.sigma1-sigma4","m":5,"weights":[1,0,0,-1,0],"paper_value_atoms":[{"coef":"1/5","atom":"PI_COT","args":[1,5]}],"citation":"m = 5: difference S(5,1) - S(5,4) in surds, (1+sqrt 5) pi / (5 sqrt(2(5 - sqrt 5)))","character":"f^(5)_4"}
{"id":"m8.sigma1-sigma5","m":8,"weights":[1,0,0,0,-1,0,0,0],"paper_value_atoms":[{"coef":"1/4","atom":"PI_OVER_SQRT","args":[2]},{"coef":"1/4","atom":"LOG_SURD_OVER_SQRT","args":[3,2,2]}],"citation":"m = 8: integral of 1/(1+x^4), (pi + log(3 + 2 sqrt 2)) / (4 sqrt 2)","character":"f^(8)_5"}
{"id":"m8.sigma1-sigma3","m":8,"weights":[1,0,-1,0,0,0,0,0],"paper_value_atoms":[],"citation":"m = 8: grouping (x^2-1)(1+x^2+x^4+x^6), no closed form given","character":"f^(8)_3"}
)JSONL";
    return text;
}

}  // namespace cyclosum
