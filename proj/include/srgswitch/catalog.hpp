#pragma once

#include <array>

#include "srgswitch/srg.hpp"

namespace srgsw {

/// Known SRG parameter sets with v <= 280 satisfying v = 2(k - theta1).
inline constexpr std::array<SrgParams, 32> kSwitchableCatalog{{
    {10, 6, 3, 4},      {16, 10, 6, 6},     {16, 9, 4, 6},      {26, 15, 8, 9},     {28, 15, 6, 10},
    {36, 21, 12, 12},   {36, 20, 10, 12},   {50, 28, 15, 16},   {64, 36, 20, 20},   {64, 35, 18, 20},
    {82, 45, 24, 25},   {100, 55, 30, 30},  {100, 54, 28, 30},  {120, 68, 40, 36},  {120, 63, 30, 36},
    {122, 66, 35, 36},  {126, 75, 48, 39},  {126, 65, 28, 39},  {136, 75, 42, 40},  {136, 72, 36, 40},
    {144, 78, 42, 42},  {144, 77, 40, 42},  {170, 91, 48, 49},  {176, 105, 68, 54}, {176, 90, 38, 54},
    {196, 104, 54, 56}, {210, 110, 55, 60}, {226, 120, 63, 64}, {256, 136, 72, 72}, {256, 135, 70, 72},
    {276, 140, 58, 84}, {280, 144, 68, 80},
}};

}  // namespace srgsw
