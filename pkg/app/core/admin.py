"""
Django admin customization.
"""
from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from core import models


class CensusRunAdmin(admin.ModelAdmin):
    """Define the admin pages for census runs."""
    ordering = ['-created']
    list_display = ['id', 'q', 'group', 'complete', 'total', 'created']
    list_filter = ['q', 'group', 'complete']
    search_fields = ['checksum']
    fieldsets = (
        (None, {'fields': ('q', 'modulus', 'group', 'complete')}),
        (_('Run'), {'fields': ('shards', 'runtime_seconds', 'output_path')}),
        (
            _('Result'),
            {
                'fields': (
                    'checksum',
                    'total',
                    'counts',
                    'representatives',
                )
            }
        ),
        (_('Important dates'), {'fields': ('created',)}),
    )
    readonly_fields = ['checksum', 'created']


admin.site.register(models.CensusRun, CensusRunAdmin)
