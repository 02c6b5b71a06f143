#pragma once

// Umbrella header: the whole library.

#include "palinpair/word.hpp"
#include "palinpair/pal_oracle.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/infinite_word.hpp"
#include "palinpair/sturmian.hpp"
#include "palinpair/streams.hpp"
#include "palinpair/complexity.hpp"
#include "palinpair/mnpp.hpp"
#include "palinpair/report.hpp"
