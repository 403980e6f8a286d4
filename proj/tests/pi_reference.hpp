#pragma once

#include <array>
#include <string_view>

// Reference values for x_0 = pi - 3, produced offline with mpmath at 130
// decimal places (its own pi, not the fixture) by iterating the Gauss map and
// evaluating q_n^2 |x_0 - p_n/q_n| directly. Truncated to 60 significant
// digits; error < 1e-60.
namespace pi_reference {

inline constexpr std::array<std::string_view, 14> kTheta = {
    "0.141592653589793238462643383279502884197169399375105820974945",
    "0.061959974100131315330474219304358674338699430619814772227715",
    "0.935055734916827366261054528494406839395371378689004474477439",
    "0.00340631193013807050663890402767168634393937927377197093250082",
    "0.633219272976002124989375894255140007666514550029479411342167",
    "0.365863809067948510309493118161702676147890895092076308398161",
    "0.538117239746245299866404456214546349381186689148578176820513",
    "0.288712411619408545875553218149452661199922961916475674497462",
    "0.613804867658181644964880296070328433239804086131033100273088",
    "0.21448855324407582011254143845013850843065610112716646149301",
    "0.747494066562042376135683577328009615391112016747561886668626",
    "0.0658970801129739939242144160533173576144097442222610305049001",
    "0.376863920123158399525806427025438249869819380318942354902491",
    "0.456506806560595650928974807487674852127361152088174683855874",
};

// x_1 = 1/(pi - 3) - 7.
inline constexpr std::string_view kX1 = "0.06251330593104576979300515257055804273431";

inline constexpr std::array<long, 14> kDigits = {7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1};

}  // namespace pi_reference
