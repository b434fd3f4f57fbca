#pragma once

// The 103 discharging rules, in table reading order (row by row): 39 T-rules,
// 28 P-rules, 36 H-rules.  Amounts count 1/60 of one charge unit; negative
// amounts reverse the direction (the vertex pays the face).

namespace discharge {

inline constexpr const char* kEmbeddedRulesText =
    "# discharging rules, amounts in 1/60 units\n"
    "# T-rules (39): a 6-face matching the window pays the 3-face across\n"
    "# the middle edge\n"
    "T:3H3x3Hx 10/60\n"
    "T:3H3x4P* 10/60\n"
    "T:*P4O4P* 32/60\n"
    "T:3Hot4P* 1/60\n"
    "T:xH3x4P* 13/60\n"
    "T:*P4t4H* 26/60\n"
    "T:xHot4P* 20/60\n"
    "T:3H3x4H* 8/60\n"
    "T:*P4O4H* 31/60\n"
    "T:3HoO4P* 20/60\n"
    "T:xH3x4H* 10/60\n"
    "T:*H4t4H* 26/60\n"
    "T:xHoO4P* 29/60\n"
    "T:3H3x+** 14/60\n"
    "T:*H4O4H* 30/60\n"
    "T:3Hot4H* 10/60\n"
    "T:xH3x+** 12/60\n"
    "T:*Q4t+** 22/60\n"
    "T:xHot4H* 20/60\n"
    "T:*Q4t4Q* 8/60\n"
    "T:*Q4O+** 24/60\n"
    "T:*HoO4H* 20/60\n"
    "T:*Q4O4Q* 16/60\n"
    "T:*P4t+** 31/60\n"
    "T:3Hot+** 20/60\n"
    "T:*Q4t4P* 17/60\n"
    "T:*P4O+** 32/60\n"
    "T:xHot+** 30/60\n"
    "T:*Q4O4P* 24/60\n"
    "T:*H43+** 31/60\n"
    "T:*HoO+** 30/60\n"
    "T:*Q4t4H* 17/60\n"
    "T:**+t+** 36/60\n"
    "T:3H3x4Q* 22/60\n"
    "T:*Q4O4H* 23/60\n"
    "T:**+O+** 32/60\n"
    "T:xH3x4Q* 26/60\n"
    "T:*P4t4P* 26/60\n"
    "T:**xxx** 20/60\n"
    "# P-rules (28): a 5-face matching the window pays its middle vertex\n"
    "P:3Q3H* 40/60\n"
    "P:xPoPx 40/60\n"
    "P:xPtHx 20/60\n"
    "P:3H3H+ 14/60\n"
    "P:xQ3H* 20/60\n"
    "P:3PtH3 12/60\n"
    "P:4PoHx 18/60\n"
    "P:4H3H4 20/60\n"
    "P:3PtP3 12/60\n"
    "P:3PtH4 18/60\n"
    "P:+PtH3 12/60\n"
    "P:4H3H+ 26/60\n"
    "P:3PtPx 10/60\n"
    "P:3PtH+ 20/60\n"
    "P:+PoHx 24/60\n"
    "P:+H3H+ 32/60\n"
    "P:xPtPx 20/60\n"
    "P:*PoH3 18/60\n"
    "P:3HtH3 12/60\n"
    "P:**+** -12/60\n"
    "P:3PoP3 20/60\n"
    "P:3PoHx 20/60\n"
    "P:3HoH3 20/60\n"
    "P:**u** 4/60\n"
    "P:3PoPx 24/60\n"
    "P:4PtH3 18/60\n"
    "P:3H3H4 16/60\n"
    "P:**w** 20/60\n"
    "# H-rules (36): a 6-face matching the window pays its middle vertex\n"
    "H:3TtH3 20/60\n"
    "H:3QtH* 24/60\n"
    "H:+P3P+ 20/60\n"
    "H:*H3H* 20/60\n"
    "H:3TtH4 30/60\n"
    "H:3QoH* 30/60\n"
    "H:3P3H3 20/60\n"
    "H:*T5T* -24/60\n"
    "H:3TtH+ 36/60\n"
    "H:xQtH* 30/60\n"
    "H:3PtHx 22/60\n"
    "H:*T6T* -40/60\n"
    "H:xTtH* 30/60\n"
    "H:xQoH* 36/60\n"
    "H:3PoHx 24/60\n"
    "H:*T+Q* -24/60\n"
    "H:xToH3 40/60\n"
    "H:3P3P3 24/60\n"
    "H:4PtH* 20/60\n"
    "H:*T+P* -18/60\n"
    "H:xToH4 30/60\n"
    "H:3PtPx 24/60\n"
    "H:4PoH3 24/60\n"
    "H:*T+H* -18/60\n"
    "H:xToH+ 24/60\n"
    "H:3PoPx 28/60\n"
    "H:4PoHx 22/60\n"
    "H:*F+F* -12/60\n"
    "H:*QtP* 40/60\n"
    "H:4PtPx 20/60\n"
    "H:+PoH* 26/60\n"
    "H:**u** 7/60\n"
    "H:*QoP* 20/60\n"
    "H:4PoPx 24/60\n"
    "H:+PtH* 14/60\n"
    "H:**w** 20/60\n";

// Reducible configurations recoverable from prose statements, shipped as the
// default configuration set.  The figure-only configurations (the bulk of
// the full 193) must be supplied by the user as a transcription file.
inline constexpr const char* kEmbeddedConfigsText =
    "# reducible configurations stated textually; the full set has 193 entries\n"
    "P:v*3P3  # paper-text\n"
    "H:3T**oQ3  # paper-text\n"
    "H:*T3***oQ3  # paper-text\n"
    "H:3T****oQ3  # paper-text\n"
    "H:3Q4Po*3P  # paper-text\n"
    "H:o3o  # paper-text\n"
    "H:3*3T4Po*3  # paper-text\n"
    "H:3Po*4T3*3  # paper-text\n"
    "H:3T4T  # paper-text\n"
    "H:o34Q  # paper-text\n";

}  // namespace discharge
