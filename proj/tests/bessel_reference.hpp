// Frozen reference values for Bessel/Hankel tests.
// Generated by tests/tools/gen_bessel_reference.py (mpmath, 50 digits).
// Do not edit by hand.
#pragma once

namespace bessel_ref {

struct JYPoint { double z; double j2; double y2; };
struct KPoint  { double z; double k2; };

inline constexpr JYPoint kJY[] = {
    {0.001, 1.2499998958333366406e-7, -1273239.8630456674272},
    {0.05, 0.00031243490091938446674, -509.61489584618155012},
    {0.5, 0.030604023458682641307, -5.4413708371742657196},
    {1.0, 0.11490348493190048047, -1.6506826068162543911},
    {2.0, 0.35283402861563771915, -0.61740810419068266648},
    {5.0, 0.046565116277752215532, 0.36766288260552451799},
    {9.0, 0.14484734153250397263, -0.22675568157464336765},
    {11.5, 0.027935927126391580673, 0.23530907641170974742},
    {12.5, -0.17336146343878265726, 0.14660018579866909854},
    {20.0, -0.16034135192299815017, -0.079191758245635960748},
    {50.0, -0.059712800794258820511, 0.095793168727596488312},
    {137.0, 0.028480110477833125339, 0.061937123016068603957},
    {1000.0, -0.024777229528605995513, -0.0047654866402075169576},
    {9500.0, -0.0046856111267323247976, 0.0067125000840902106781},
};

inline constexpr KPoint kK[] = {
    {0.05, 799.50120706477216150},
    {0.5, 7.5501835512408694366},
    {0.8660254037844386, 2.2714414651261117237},
    {1.0, 1.6248388986351774828},
    {2.0, 0.25375975456605586294},
    {4.0, 0.017401425529487240005},
    {6.5, 0.00096589927477512108867},
    {9.0, 0.000062800649929670790959},
    {12.0, 2.5826183081060227032e-6},
    {18.0, 4.9788921848360763544e-9},
    {50.0, 3.5479318388581977384e-23},
    {200.0, 1.2379694035112633098e-88},
    {650.0, 2.5202396072381817003e-284},
};

// Spacelike square-root kernel scalar at ct=0.5, r=1, mu=1 (pure imaginary).
inline constexpr double kSpacelikeIm = -0.076715045940287834055;

}  // namespace bessel_ref
