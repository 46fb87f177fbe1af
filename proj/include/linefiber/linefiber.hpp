#pragma once

#include <linefiber/arrangement.hpp>
#include <linefiber/builtins.hpp>
#include <linefiber/checks.hpp>
#include <linefiber/cyclotomic.hpp>
#include <linefiber/defect.hpp>
#include <linefiber/errors.hpp>
#include <linefiber/hodge.hpp>
#include <linefiber/numeric.hpp>
#include <linefiber/projective.hpp>
#include <linefiber/rational.hpp>
#include <linefiber/report.hpp>
#include <linefiber/spectrum.hpp>
