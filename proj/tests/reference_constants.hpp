// Generated by tools/make_reference_constants.py (mpmath, 50 digits).
// Canonical tank: g=9.81 mu=0.1 sigma=0.073 L=1 m=0.5 H_max=1
//                 delta=1 omega=1 q=1 k=q*theta(R/2)/2.
#pragma once

namespace slosh::testing {

// G(0)
inline constexpr double kGZero = -0.471404520791031682933896241403;
// G(4 h*)
inline constexpr double kGFourHStar = 0.942809041582063365867792482806;
// c = 1/(mu sqrt(delta g))
inline constexpr double kC = 3.19275428407050464212775352371;
// positivity threshold branch 1
inline constexpr double kTheta1 = 0.147648230602334005755415237659;
// positivity threshold branch 2
inline constexpr double kTheta2 = 0.00125;
// positivity threshold branch 3
inline constexpr double kTheta3 = 0.0172329623574846478378696778174;
// R
inline constexpr double kSpillRadius = 0.0432451655132285039578376974331;
// Q1(R/2)
inline constexpr double kQ1AtHalfR = 0.223588903274988216665544008067;
// Q2(R/2)
inline constexpr double kQ2AtHalfR = 0.84241313666947190941381492307;
// theta(R/2)
inline constexpr double kThetaAtHalfR = 0.0521727072403830113816984500407;
// k = q theta(R/2)/2
inline constexpr double kAutoK = 0.0260863536201915056908492250203;
// Lambda(R/2)
inline constexpr double kLambdaAtHalfR = 10.0007249387314233965259454852;
// beta(R/2) with the auto k
inline constexpr double kBetaAtHalfR = 0.000017751707427604978705187359019;
// G2(R/2) with the auto k
inline constexpr double kG2AtHalfR = 9.81;
// beta/Lambda at R/2
inline constexpr double kLambdaV = 0.00000177504206308635417150079368082;
// beta/(2 Lambda) at R/2
inline constexpr double kLambdaNorm = 0.000000887521031543177085750396840409;

}  // namespace slosh::testing
