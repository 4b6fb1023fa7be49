#pragma once

// Reference measurement tables used by the colorimetry and dataset modules.
// CIE 1931 2-degree standard observer, 1 nm steps over [360, 830] nm.
// CIE standard illuminant D65, 5 nm steps over [360, 830] nm.
// CIE daylight components S0/S1/S2, 10 nm steps over [380, 780] nm.

namespace hadacodec::tables {

inline constexpr int kCieSamples = 471;
inline constexpr double kCieLambdaMin = 360.0;
inline constexpr double kCieLambdaStep = 1.0;

extern const double kCieX[kCieSamples];
extern const double kCieY[kCieSamples];
extern const double kCieZ[kCieSamples];

inline constexpr int kD65Samples = 95;
inline constexpr double kD65LambdaMin = 360.0;
inline constexpr double kD65LambdaStep = 5.0;

extern const double kD65[kD65Samples];

inline constexpr int kDaylightSamples = 41;
inline constexpr double kDaylightLambdaMin = 380.0;
inline constexpr double kDaylightLambdaStep = 10.0;

extern const double kDaylightS0[kDaylightSamples];
extern const double kDaylightS1[kDaylightSamples];
extern const double kDaylightS2[kDaylightSamples];

}  // namespace hadacodec::tables
