// Generated by tools/derive_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace frozen {
inline constexpr double kEuler = 0.5772156649015328606065121;
inline constexpr double kLnGlaisher = 0.248754477033784262547253;
inline constexpr double kSigmaLog = -0.08106146679532725821967026;
inline constexpr double kHalfLnPi = 0.5723649429247000870717137;
inline constexpr double kPsiMinus2Half = 0.803719849629681710151993;
inline constexpr double kBinetJ10 = 0.008330563433362871256469319;
inline constexpr double kGregoryTrue = 4.809854526746569220624736;
inline constexpr double kStieltjes1 = -0.07281584548367672486058638;
inline constexpr double kSigmaBarnesG = 0.04529364586810117912899221;
inline constexpr double kGammaLnGammaLo = 0.02329920174866514910156759;
inline constexpr double kGammaLnGammaHi = 0.0614188615796033123911262;
inline constexpr double kLiu2x1 = -0.02740706052595882694806935;
inline constexpr double kEulerSeriesLog = 0.2075463656554391720835858;
inline constexpr double kExpIntTail = 0.4586751453870818910216436;
inline constexpr double kLnGammaOneFifth = 1.524063822430784524881056;
inline constexpr double kLnGammaSevenThirds = 0.1744904307114383052311478;
inline constexpr double kZetaMinus1p5 = -0.02548520188983303594954299;
inline constexpr double kGammaLnGamma = 0.04529364586810117912899221;
inline constexpr double kHurwitzLimit1_1e1 = 0.009706844616416705281055662;
inline constexpr double kHurwitzLimit2_1e1 = -0.00001645554800296324202636637;
inline constexpr double kHurwitzLimit1_1e2 = 0.003119290272143222208919573;
inline constexpr double kHurwitzLimit2_1e2 = -0.0000005208286832188032267761307;
inline constexpr double kHurwitzLimit1_1e3 = 0.0009880306583788472155917419;
inline constexpr double kHurwitzLimit2_1e3 = -1.64701946761576606657891e-8;
inline constexpr double kHurwitzLimit1_1e4 = 0.0003124942710286365333077182;
inline constexpr double kHurwitzLimit2_1e4 = -5.208333328683035732596063e-10;
}  // namespace frozen
