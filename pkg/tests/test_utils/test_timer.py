#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import pytest

from spunnormal.utils import MultiTimer


@pytest.mark.cpu
def test_stage_keeps_history():
    timer = MultiTimer()
    with timer.stage('enumerate'):
        pass
    with timer.stage('enumerate'):
        pass
    assert [name for name, _ in timer] == ['enumerate']
    assert timer.get_timer('enumerate').get_history_sum() >= 0
    assert len(timer.get_timer('enumerate').history) == 2

    timer.reset('enumerate')
    assert timer.get_timer('enumerate').get_history_sum() == 0


@pytest.mark.cpu
def test_disabled_timer_records_nothing():
    timer = MultiTimer(on=False)
    with timer.stage('parse'):
        pass
    assert list(timer) == []
    assert timer.stop('parse') is None
